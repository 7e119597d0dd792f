#include "fourcolor/derivation.hpp"

namespace fourcolor {

std::vector<LSet> replay(const DerivationScript& script) {
  std::vector<LSet> states{script.start};
  states.reserve(script.steps.size() + 1);
  for (std::size_t n = 0; n < script.steps.size(); ++n) {
    const auto label = script.steps[n];
    try {
      states.push_back(apply_set(states.back(), label));
    } catch (const PreconditionError& e) {
      throw PreconditionError("step " + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return states;
}

}  // namespace fourcolor
