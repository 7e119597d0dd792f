#pragma once

#include <vector>

#include "fourcolor/lset.hpp"

namespace fourcolor {

/// A start state plus a sequence of transitions; witnesses L => L'.
struct DerivationScript {
  LSet start = LSet::start();
  std::vector<TransitionLabel> steps;

  friend bool operator==(const DerivationScript&, const DerivationScript&) = default;
};

/// The state sequence L_1..L_n, start included. The empty set is carried
/// through later steps (with its nominal length) instead of being rejected.
std::vector<LSet> replay(const DerivationScript& script);

}  // namespace fourcolor
