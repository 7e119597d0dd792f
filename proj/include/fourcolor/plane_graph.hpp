#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/error.hpp"

namespace fourcolor {

/// Vertex identifier, 0-based in memory and 1-based in text.
using Vertex = int;

/// A plane graph given combinatorially by a rotation system.
///
/// rotation(v) lists the neighbours of v in counterclockwise order; the
/// outer face is declared as a vertex cycle whose first two entries form
/// the edge v1 v2. Structural validity is reported by validate(), not
/// enforced here, so malformed inputs can still be inspected.
class PlaneGraph {
public:
  PlaneGraph() = default;
  PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer);

  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  int edge_count() const noexcept;
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotation_; }
  const std::vector<Vertex>& outer() const noexcept { return outer_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Faces traced by the rotation system; each as a vertex cycle. Requires a
  /// symmetric rotation.
  std::vector<std::vector<Vertex>> faces() const;

  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;

private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Vertex> outer_;
};

struct ValidationReport {
  bool symmetric = false;
  bool simple = false;
  bool connected = false;
  bool euler = false;
  bool two_connected = false;
  bool outer_face_found = false;
  /// Every face other than the outer face is a triangle.
  bool inner_faces_triangles = false;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  /// The matched outer face as traced.
  std::vector<Vertex> outer_face;
  std::vector<std::string> problems;

  bool near_triangulation() const noexcept {
    return symmetric && simple && connected && euler && two_connected && outer_face_found &&
           inner_faces_triangles;
  }
  bool triangulation() const noexcept { return near_triangulation() && outer_face.size() == 3; }
};

/// Checks simplicity, rotation symmetry, Euler's formula, 2-connectedness
/// and that every inner face is a triangle.
ValidationReport validate(const PlaneGraph& graph);

/// Triangles (sorted vertex triples) of a triangulation that are not faces.
/// Throws GraphError when the graph is not a valid triangulation.
std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneGraph& graph);

struct InducedSubgraph {
  PlaneGraph graph;
  /// to_parent[local] is the parent vertex.
  std::vector<Vertex> to_parent;
  /// Outer face of the subgraph in parent identifiers.
  std::vector<Vertex> outer_in_parent;
};

/// Restricts the rotation system to `vertices`. The outer face is the face
/// that is not a face of the parent (the longest, if several); when all
/// faces are inherited the parent's outer face is used.
InducedSubgraph induced_subgraph(const PlaneGraph& graph, std::span<const Vertex> vertices);

/// Walk along `cycle` from `from` to `to` avoiding the direct edge between
/// them. The two must be consecutive on the cycle.
std::vector<Vertex> boundary_path(std::span<const Vertex> cycle, Vertex from, Vertex to);

// ".rot": `rot n=<n> outer=<v1>,<v2>,...` then `v: u1 u2 ... ud` per vertex,
// counterclockwise, identifiers 1..n.
std::string format_rot(const PlaneGraph& graph);
PlaneGraph parse_rot(std::string_view text);

}  // namespace fourcolor
