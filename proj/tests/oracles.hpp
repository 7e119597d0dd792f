#pragma once

// Reference implementations used only by tests. They follow the textbook
// definitions directly on std::string / adjacency matrices and share no code
// with the library's encoded fast paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fourcolor/lset.hpp"
#include "fourcolor/plane_graph.hpp"

namespace oracle {

using StringSet = std::set<std::string>;

/// { s_1..s_i c s_j..s_l : c not in s_i..s_j }, positions 1-indexed.
inline StringSet apply_string(const std::string& s, int i, int j, int k) {
  StringSet out;
  for (int c = 0; c < k; ++c) {
    const char ch = static_cast<char>('a' + c);
    bool occurs = false;
    for (int t = i; t <= j; ++t) occurs |= s[static_cast<std::size_t>(t - 1)] == ch;
    if (occurs) continue;
    out.insert(s.substr(0, static_cast<std::size_t>(i)) + ch + s.substr(static_cast<std::size_t>(j - 1)));
  }
  return out;
}

inline StringSet apply_set(const StringSet& set, int i, int j, int k) {
  StringSet out;
  for (const auto& s : set) {
    auto part = apply_string(s, i, j, k);
    out.insert(part.begin(), part.end());
  }
  return out;
}

inline StringSet to_strings(const fourcolor::LSet& set) {
  auto v = set.strings();
  return {v.begin(), v.end()};
}

inline std::string random_string(std::mt19937_64& rng, int length, int k) {
  std::uniform_int_distribution<int> letter(0, k - 1);
  std::string s;
  for (int t = 0; t < length; ++t) s.push_back(static_cast<char>('a' + letter(rng)));
  return s;
}

/// Random l-set with up to `max_members` members (possibly fewer after dedup).
inline fourcolor::LSet random_lset(std::mt19937_64& rng, int length, int k, int max_members) {
  std::uniform_int_distribution<int> count(0, max_members);
  std::vector<std::string> members;
  const int m = count(rng);
  for (int n = 0; n < m; ++n) members.push_back(random_string(rng, length, k));
  return fourcolor::LSet::from_strings(fourcolor::Alphabet(k), length, members);
}

/// Adjacency matrix of a rotation system.
inline std::vector<std::vector<char>> adjacency(const fourcolor::PlaneGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (int u : g.rotation(static_cast<int>(v))) adj[v][static_cast<std::size_t>(u)] = 1;
  return adj;
}

/// Counts proper colorings by trying all k^(free vertices) assignments.
inline std::uint64_t brute_force_colorings(const fourcolor::PlaneGraph& g, int k,
                                           const std::vector<std::pair<int, int>>& seed = {}) {
  const auto adj = adjacency(g);
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (auto [v, x] : seed) color[static_cast<std::size_t>(v)] = x;
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (color[static_cast<std::size_t>(v)] < 0) free.push_back(v);
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < free.size(); ++t) total *= static_cast<std::uint64_t>(k);
  std::uint64_t proper = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int v : free) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
      rest /= static_cast<std::uint64_t>(k);
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
            color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)])
          ok = false;
    proper += ok ? 1 : 0;
  }
  return proper;
}

/// All triangles (sorted) of the graph minus those whose vertex set is a face.
inline std::vector<std::array<int, 3>> nonfacial_triangles(const fourcolor::PlaneGraph& g) {
  const auto adj = adjacency(g);
  std::set<std::array<int, 3>> faces;
  for (auto f : g.faces()) {
    if (f.size() != 3) continue;
    std::sort(f.begin(), f.end());
    faces.insert({f[0], f[1], f[2]});
  }
  std::vector<std::array<int, 3>> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b),
                   C = static_cast<std::size_t>(c);
        if (adj[A][B] && adj[B][C] && adj[A][C] && !faces.count({a, b, c})) out.push_back({a, b, c});
      }
  return out;
}

}  // namespace oracle
