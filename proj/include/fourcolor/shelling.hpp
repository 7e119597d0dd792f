#pragma once

#include <span>
#include <string>
#include <vector>

#include "fourcolor/derivation.hpp"
#include "fourcolor/plane_graph.hpp"

namespace fourcolor {

/// Vertex order v1..vn with, for each added vertex v_{i+1} (i >= 3), the
/// boundary positions (j,k) of its first and last neighbour in G_i.
struct ShellingOrder {
  std::vector<Vertex> order;
  std::vector<TransitionLabel> labels;

  friend bool operator==(const ShellingOrder&, const ShellingOrder&) = default;
};

/// Order of a 4-connected plane triangulation in which every prefix and
/// every complementary suffix induces a near-triangulation. v1 v2 must be an
/// edge of the outer face; the third outer vertex comes last.
///
/// Ties are broken towards the smallest boundary position, the shortest
/// chord with the smallest start, and increasing identifiers for the two
/// free vertices before the last.
ShellingOrder compute_shelling_order(const PlaneGraph& graph, Vertex v1, Vertex v2);

/// Labels (j,k): w_j..w_k are the neighbours of v_{i+1} on the boundary of
/// G_i, read from v1 (position 1) to v2. Throws GraphError if the neighbours
/// are not a consecutive run of length >= 2.
DerivationScript derivation_from_order(const PlaneGraph& graph, std::span<const Vertex> order);

struct Construction {
  PlaneGraph graph;
  ShellingOrder order;
};

/// Builds the near-triangulation described by `steps`: start from the
/// triangle v1 v3 v2 and, for label (i,j), attach a new vertex to boundary
/// positions i..j. Vertices are numbered in insertion order.
Construction build_from_derivation(const std::vector<TransitionLabel>& steps);
/// As above; the start state must be {"acb"}.
Construction build_from_derivation(const DerivationScript& script);

struct ShellingCheck {
  bool ok = true;
  /// Prefix size i of the first failure, or -1.
  int failed_at = -1;
  std::string reason;
};

/// Validates G_i and its complement as near-triangulations for 3 <= i <= n-3.
ShellingCheck check_shelling(const PlaneGraph& graph, std::span<const Vertex> order);

}  // namespace fourcolor
