#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fourcolor/lset.hpp"
#include "fourcolor/plane_graph.hpp"
#include "fourcolor/text_format.hpp"

namespace fixtures {

inline fourcolor::PlaneGraph catalog(const std::string& name) {
  return fourcolor::parse_rot(
      fourcolor::read_text_file(std::string(FOURCOLOR_CATALOG_DIR) + "/" + name + ".rot"));
}

using Script = std::vector<fourcolor::TransitionLabel>;

/// Every label sequence of length <= max_depth valid from a 3-set.
inline std::vector<Script> all_scripts(int max_depth) {
  std::vector<Script> out;
  Script current;
  std::function<void(int)> grow = [&](int length) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_depth) return;
    for (auto label : fourcolor::labels_for_length(length)) {
      current.push_back(label);
      grow(label.result_length(length));
      current.pop_back();
    }
  };
  grow(3);
  return out;
}

inline Script random_script(std::mt19937_64& rng, int depth) {
  Script out;
  int length = 3;
  for (int n = 0; n < depth; ++n) {
    const auto labels = fourcolor::labels_for_length(length);
    const auto label = labels[rng() % labels.size()];
    out.push_back(label);
    length = label.result_length(length);
  }
  return out;
}

}  // namespace fixtures
