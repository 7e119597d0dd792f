#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fourcolor/alphabet.hpp"
#include "fourcolor/derivation.hpp"
#include "fourcolor/lset.hpp"
#include "fourcolor/plane_graph.hpp"

namespace fourcolor {

/// Letter per vertex.
using Coloring = std::vector<Letter>;
/// Fixed (vertex, letter) assignments.
using ColoringSeed = std::vector<std::pair<Vertex, Letter>>;

/// Calls `visit` once for every proper coloring of `graph` with the given
/// alphabet that agrees with `seed`. Vertices are assigned in `order`
/// (index order when empty), letters in alphabet order, which fixes the
/// enumeration order. Returning false from `visit` stops the enumeration.
/// Throws PreconditionError if the seed itself is improper.
void enumerate_colorings(const PlaneGraph& graph, const ColoringSeed& seed, Alphabet alphabet,
                         const std::function<bool(const Coloring&)>& visit,
                         std::span<const Vertex> order = {});

std::uint64_t count_colorings(const PlaneGraph& graph, const ColoringSeed& seed, Alphabet alphabet,
                              std::span<const Vertex> order = {});

/// Boundary strings g(w_1)..g(w_l) of G_i = graph[order[0..i)] over all
/// proper colorings with g(v1)=a, g(v2)=b, g(v3)=c; the walk runs along the
/// outer face of G_i from v1 to v2.
LSet boundary_string_set(const PlaneGraph& graph, std::span<const Vertex> order, int i,
                         Alphabet alphabet = Alphabet(4));

struct RoundtripResult {
  bool ok = true;
  /// Number of steps in the first mismatching prefix, if any.
  std::optional<int> mismatch_prefix;
  std::optional<LSet> replayed;
  std::optional<LSet> from_colorings;

  explicit operator bool() const noexcept { return ok; }
};

/// Builds the near-triangulation for `script` and compares, for every prefix,
/// the replayed state with the boundary strings of the coloring oracle.
RoundtripResult roundtrip_check(const DerivationScript& script);

}  // namespace fourcolor
