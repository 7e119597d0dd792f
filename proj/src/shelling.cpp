#include "fourcolor/shelling.hpp"

#include <algorithm>
#include <numeric>

namespace fourcolor {

namespace {

std::string vname(Vertex v) { return std::to_string(v + 1); }

std::string triple_name(const std::array<Vertex, 3>& t) {
  return vname(t[0]) + "," + vname(t[1]) + "," + vname(t[2]);
}

int neighbours_in(const PlaneGraph& g, Vertex v, const std::vector<char>& in_set) {
  int count = 0;
  for (Vertex u : g.rotation(v)) count += in_set[static_cast<std::size_t>(u)] ? 1 : 0;
  return count;
}

/// Outer boundary of the complement, rotated so that it starts at `first`.
std::vector<Vertex> complement_boundary(const PlaneGraph& g, const std::vector<char>& placed,
                                        Vertex first) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!placed[static_cast<std::size_t>(v)]) rest.push_back(v);
  auto cycle = induced_subgraph(g, rest).outer_in_parent;
  auto it = std::find(cycle.begin(), cycle.end(), first);
  if (it == cycle.end())
    throw GraphError("vertex " + vname(first) + " is not on the boundary of the remaining graph");
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

ShellingOrder compute_shelling_order(const PlaneGraph& g, Vertex v1, Vertex v2) {
  const auto report = validate(g);
  if (!report.triangulation())
    throw GraphError("input is not a plane triangulation" +
                     (report.problems.empty() ? std::string() : ": " + report.problems.front()));
  const int n = g.vertex_count();
  if (n < 6) throw GraphError("a 4-connected triangulation has at least 6 vertices, got " + std::to_string(n));
  const auto separating = separating_triangles(g);
  if (!separating.empty())
    throw GraphError("input is not 4-connected: separating triangle " + triple_name(separating.front()));

  const auto& outer = report.outer_face;
  const bool v1_outer = std::count(outer.begin(), outer.end(), v1) == 1;
  const bool v2_outer = std::count(outer.begin(), outer.end(), v2) == 1;
  if (!v1_outer || !v2_outer || v1 == v2)
    throw GraphError("v1=" + vname(v1) + ", v2=" + vname(v2) + " is not an edge of the outer face");
  Vertex vn = -1;
  for (Vertex v : outer)
    if (v != v1 && v != v2) vn = v;

  Vertex v3 = -1;
  for (Vertex u : g.rotation(v1))
    if (u != vn && g.adjacent(u, v2)) v3 = u;
  if (v3 < 0) throw GraphError("no inner face on the edge " + vname(v1) + "," + vname(v2));

  ShellingOrder result;
  result.order = {v1, v2, v3};
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex v : result.order) placed[static_cast<std::size_t>(v)] = 1;

  for (int i = 3; i < n - 3; ++i) {
    const auto boundary = complement_boundary(g, placed, vn);
    const int l = static_cast<int>(boundary.size());
    auto eligible = [&](int pos) {
      return neighbours_in(g, boundary[static_cast<std::size_t>(pos - 1)], placed) >= 2;
    };

    // Shortest chord w_a w_b, a < b, smallest a among ties.
    int best_a = -1, best_b = -1;
    for (int a = 1; a <= l; ++a)
      for (int b = a + 2; b <= l; ++b) {
        if (a == 1 && b == l) continue;
        if (!g.adjacent(boundary[static_cast<std::size_t>(a - 1)], boundary[static_cast<std::size_t>(b - 1)]))
          continue;
        if (best_a < 0 || b - a < best_b - best_a) {
          best_a = a;
          best_b = b;
        }
      }

    int chosen = -1;
    if (best_a >= 0) {
      for (int p = best_a + 1; p < best_b && chosen < 0; ++p)
        if (eligible(p)) chosen = p;
      if (chosen < 0)
        throw GraphError("step " + std::to_string(i + 1) + ": no vertex strictly inside chord " +
                         vname(boundary[static_cast<std::size_t>(best_a - 1)]) + "," +
                         vname(boundary[static_cast<std::size_t>(best_b - 1)]) +
                         " has two neighbours in the placed part");
    } else {
      for (int p = 2; p <= l && chosen < 0; ++p)
        if (eligible(p)) chosen = p;
      if (chosen < 0)
        throw GraphError("step " + std::to_string(i + 1) +
                         ": no boundary vertex has two neighbours in the placed part");
    }
    const Vertex next = boundary[static_cast<std::size_t>(chosen - 1)];
    result.order.push_back(next);
    placed[static_cast<std::size_t>(next)] = 1;
  }

  for (Vertex v = 0; v < n; ++v)
    if (!placed[static_cast<std::size_t>(v)] && v != vn) result.order.push_back(v);
  result.order.push_back(vn);
  result.labels = derivation_from_order(g, result.order).steps;
  return result;
}

DerivationScript derivation_from_order(const PlaneGraph& g, std::span<const Vertex> order) {
  const int n = g.vertex_count();
  if (order.size() < 3 || static_cast<int>(order.size()) > n)
    throw GraphError("order must list between 3 and n vertices");
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n) throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
    if (placed[static_cast<std::size_t>(v)]) throw GraphError("vertex " + vname(v) + " repeated in order");
    placed[static_cast<std::size_t>(v)] = 1;
  }
  std::fill(placed.begin(), placed.end(), 0);

  const Vertex v1 = order[0], v2 = order[1], v3 = order[2];
  if (!g.adjacent(v1, v2) || !g.adjacent(v1, v3) || !g.adjacent(v2, v3))
    throw GraphError("v1, v2, v3 = " + vname(v1) + "," + vname(v2) + "," + vname(v3) +
                     " do not form a triangle");
  std::vector<Vertex> boundary{v1, v3, v2};
  for (Vertex v : boundary) placed[static_cast<std::size_t>(v)] = 1;

  DerivationScript script;
  for (std::size_t t = 3; t < order.size(); ++t) {
    const Vertex x = order[t];
    std::vector<int> positions;
    for (std::size_t p = 0; p < boundary.size(); ++p)
      if (g.adjacent(x, boundary[p])) positions.push_back(static_cast<int>(p) + 1);
    const int placed_neighbours = neighbours_in(g, x, placed);
    if (placed_neighbours < 2)
      throw GraphError("vertex " + vname(x) + " has " + std::to_string(placed_neighbours) +
                       " neighbours among earlier vertices, need at least 2");
    if (static_cast<int>(positions.size()) != placed_neighbours)
      throw GraphError("vertex " + vname(x) + " is adjacent to an interior vertex of G_" +
                       std::to_string(t));
    const int j = positions.front(), k = positions.back();
    if (k - j + 1 != static_cast<int>(positions.size()))
      throw GraphError("neighbours of vertex " + vname(x) + " are not consecutive on the boundary of G_" +
                       std::to_string(t));
    script.steps.push_back({j, k});
    std::vector<Vertex> next(boundary.begin(), boundary.begin() + j);
    next.push_back(x);
    next.insert(next.end(), boundary.begin() + (k - 1), boundary.end());
    boundary = std::move(next);
    placed[static_cast<std::size_t>(x)] = 1;
  }
  return script;
}

Construction build_from_derivation(const std::vector<TransitionLabel>& steps) {
  std::vector<std::vector<Vertex>> rot{{1, 2}, {2, 0}, {0, 1}};
  std::vector<Vertex> boundary{0, 2, 1};  // v1, v3, v2
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto label = steps[s];
    const int l = static_cast<int>(boundary.size());
    if (!label.valid_for(l))
      throw PreconditionError("step " + std::to_string(s + 1) + ": label " + label.str() +
                              " invalid for boundary length " + std::to_string(l));
    const Vertex x = static_cast<Vertex>(rot.size());
    for (int t = label.i; t <= label.j; ++t) {
      const Vertex w = boundary[static_cast<std::size_t>(t - 1)];
      const Vertex succ = boundary[static_cast<std::size_t>(t < l ? t : 0)];
      auto& rw = rot[static_cast<std::size_t>(w)];
      const auto it = std::find(rw.begin(), rw.end(), succ);
      rw.insert(it + 1, x);
    }
    rot.emplace_back(boundary.begin() + (label.i - 1), boundary.begin() + label.j);
    std::vector<Vertex> next(boundary.begin(), boundary.begin() + label.i);
    next.push_back(x);
    next.insert(next.end(), boundary.begin() + (label.j - 1), boundary.end());
    boundary = std::move(next);
  }
  // Outer cycle v1, v2, w_{l-1}, ..., w_2.
  std::vector<Vertex> outer{boundary.front()};
  outer.insert(outer.end(), boundary.rbegin(), boundary.rend() - 1);

  Construction c;
  c.order.order.resize(rot.size());
  std::iota(c.order.order.begin(), c.order.order.end(), 0);
  c.order.labels = steps;
  c.graph = PlaneGraph(std::move(rot), std::move(outer));
  return c;
}

Construction build_from_derivation(const DerivationScript& script) {
  if (script.start != LSet::start(script.start.alphabet()))
    throw PreconditionError("graph construction starts from {acb}, got " + script.start.str());
  return build_from_derivation(script.steps);
}

ShellingCheck check_shelling(const PlaneGraph& g, std::span<const Vertex> order) {
  const int n = static_cast<int>(order.size());
  if (n != g.vertex_count()) return {false, -1, "order does not list every vertex"};
  for (int i = 3; i <= n - 3; ++i) {
    for (bool prefix : {true, false}) {
      auto part = prefix ? order.first(static_cast<std::size_t>(i)) : order.subspan(static_cast<std::size_t>(i));
      const auto sub = induced_subgraph(g, part);
      const auto report = validate(sub.graph);
      if (!report.near_triangulation())
        return {false, i,
                std::string(prefix ? "prefix" : "suffix") + " at i=" + std::to_string(i) +
                    " is not a near-triangulation" +
                    (report.problems.empty() ? std::string() : ": " + report.problems.front())};
    }
  }
  return {};
}

}  // namespace fourcolor
