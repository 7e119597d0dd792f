#include "fourcolor/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "fourcolor/text_format.hpp"

namespace fourcolor {

namespace {

std::string vname(Vertex v) { return std::to_string(v + 1); }

bool in_range(const PlaneGraph& g, Vertex v) { return v >= 0 && v < g.vertex_count(); }

/// Index of `u` in the rotation of `v`, or -1.
int position_in(const std::vector<Vertex>& rot, Vertex u) {
  auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

/// Faces as dart cycles; next dart after (u,v) is (v, w) with w preceding u
/// in the counterclockwise rotation at v.
std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rot) {
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u) {
    for (Vertex v : rot[static_cast<std::size_t>(u)]) {
      if (used.count({u, v})) continue;
      std::vector<Vertex> face;
      Vertex a = u, b = v;
      while (!used.count({a, b})) {
        used.insert({a, b});
        face.push_back(a);
        const auto& rb = rot[static_cast<std::size_t>(b)];
        const int p = position_in(rb, a);
        if (p < 0) throw GraphError("rotation not symmetric at vertex " + vname(b));
        const Vertex c = rb[static_cast<std::size_t>((p + static_cast<int>(rb.size()) - 1) %
                                                     static_cast<int>(rb.size()))];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size() || a.empty()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool fwd = true, bwd = true;
    for (std::size_t t = 0; t < n && (fwd || bwd); ++t) {
      if (a[t] != b[(shift + t) % n]) fwd = false;
      if (a[t] != b[(shift + n - t) % n]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

bool connected_without(const PlaneGraph& g, Vertex removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v)
    if (v != removed) {
      root = v;
      break;
    }
  if (root < 0) return true;
  std::vector<Vertex> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.rotation(v)) {
      if (u == removed || !in_range(g, u) || seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == n - (removed >= 0 ? 1 : 0);
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer)
    : rotation_(std::move(rotation)), outer_(std::move(outer)) {
  const int n = vertex_count();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : rotation_[static_cast<std::size_t>(v)])
      if (u < 0 || u >= n)
        throw GraphError("vertex " + vname(v) + ": neighbour " + std::to_string(u + 1) +
                         " out of range 1.." + std::to_string(n));
  for (Vertex v : outer_)
    if (v < 0 || v >= n) throw GraphError("outer face vertex " + std::to_string(v + 1) + " out of range");
}

int PlaneGraph::edge_count() const noexcept {
  std::size_t darts = 0;
  for (const auto& r : rotation_) darts += r.size();
  return static_cast<int>(darts / 2);
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  return position_in(rotation(u), v) >= 0;
}

std::vector<std::vector<Vertex>> PlaneGraph::faces() const { return trace_faces(rotation_); }

ValidationReport validate(const PlaneGraph& g) {
  ValidationReport r;
  const int n = g.vertex_count();
  r.vertices = n;
  r.edges = g.edge_count();

  r.simple = true;
  r.symmetric = true;
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = g.rotation(v);
    std::set<Vertex> distinct;
    for (Vertex u : rot) {
      if (u == v) {
        r.simple = false;
        r.problems.push_back("vertex " + vname(v) + ": loop");
      } else if (!distinct.insert(u).second) {
        r.simple = false;
        r.problems.push_back("vertex " + vname(v) + ": neighbour " + vname(u) + " listed twice");
      }
      if (u != v && !g.adjacent(u, v)) {
        r.symmetric = false;
        r.problems.push_back("vertex " + vname(v) + " lists " + vname(u) + " but " + vname(u) +
                             " does not list " + vname(v));
      }
    }
  }

  r.connected = n > 0 && connected_without(g, -1);
  if (!r.connected) r.problems.push_back("graph is not connected");
  if (!r.symmetric || !r.simple) return r;

  const auto faces = g.faces();
  r.faces = static_cast<int>(faces.size());
  r.euler = r.connected && n - r.edges + r.faces == 2;
  if (!r.euler)
    r.problems.push_back("Euler check failed: n - E + F = " + std::to_string(n - r.edges + r.faces));

  r.two_connected = r.connected && n >= 3;
  for (Vertex v = 0; v < n && r.two_connected; ++v) {
    if (!connected_without(g, v)) {
      r.two_connected = false;
      r.problems.push_back("vertex " + vname(v) + " is a cut vertex");
    }
  }
  if (n < 3) r.problems.push_back("fewer than 3 vertices");

  int outer_index = -1;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (same_cycle(faces[f], g.outer())) {
      outer_index = static_cast<int>(f);
      break;
    }
  }
  r.outer_face_found = outer_index >= 0;
  if (!r.outer_face_found) r.problems.push_back("declared outer face is not a face of the embedding");
  else r.outer_face = faces[static_cast<std::size_t>(outer_index)];

  r.inner_faces_triangles = r.outer_face_found;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (static_cast<int>(f) == outer_index || faces[f].size() == 3) continue;
    r.inner_faces_triangles = false;
    std::string cycle;
    for (Vertex v : faces[f]) cycle += (cycle.empty() ? "" : ",") + vname(v);
    r.problems.push_back("inner face " + cycle + " is not a triangle");
  }
  return r;
}

std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneGraph& g) {
  const auto report = validate(g);
  if (!report.triangulation())
    throw GraphError("separating_triangles needs a triangulation" +
                     (report.problems.empty() ? std::string() : ": " + report.problems.front()));
  std::set<std::array<Vertex, 3>> face_triples;
  for (auto f : g.faces()) {
    std::sort(f.begin(), f.end());
    face_triples.insert({f[0], f[1], f[2]});
  }
  std::vector<std::array<Vertex, 3>> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.rotation(u)) {
      if (v <= u) continue;
      for (Vertex w : g.rotation(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        if (!face_triples.count({u, v, w})) out.push_back({u, v, w});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const PlaneGraph& g, std::span<const Vertex> vertices) {
  const int n = g.vertex_count();
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  InducedSubgraph sub;
  for (Vertex v : vertices) {
    if (!in_range(g, v)) throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
    if (local[static_cast<std::size_t>(v)] >= 0) throw GraphError("vertex " + vname(v) + " repeated");
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<std::vector<Vertex>> rot(sub.to_parent.size());
  for (std::size_t a = 0; a < sub.to_parent.size(); ++a)
    for (Vertex u : g.rotation(sub.to_parent[a]))
      if (local[static_cast<std::size_t>(u)] >= 0) rot[a].push_back(local[static_cast<std::size_t>(u)]);

  // Darts of the parent, keyed to their face.
  const auto parent_faces = g.faces();
  std::map<std::pair<Vertex, Vertex>, std::size_t> dart_face;
  for (std::size_t f = 0; f < parent_faces.size(); ++f) {
    const auto& face = parent_faces[f];
    for (std::size_t t = 0; t < face.size(); ++t)
      dart_face[{face[t], face[(t + 1) % face.size()]}] = f;
  }

  std::vector<Vertex> chosen;
  for (const auto& face : trace_faces(rot)) {
    std::vector<Vertex> in_parent;
    for (Vertex v : face) in_parent.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    const std::size_t f0 = dart_face.at({in_parent[0], in_parent[1 % in_parent.size()]});
    bool inherited = parent_faces[f0].size() == in_parent.size();
    for (std::size_t t = 0; t < in_parent.size() && inherited; ++t)
      inherited = dart_face.at({in_parent[t], in_parent[(t + 1) % in_parent.size()]}) == f0;
    if (!inherited && in_parent.size() > chosen.size()) chosen = in_parent;
  }
  if (chosen.empty()) {
    const bool has_outer = std::all_of(g.outer().begin(), g.outer().end(),
                                       [&](Vertex v) { return local[static_cast<std::size_t>(v)] >= 0; });
    if (has_outer) chosen = g.outer();
  }
  std::vector<Vertex> outer_local;
  for (Vertex v : chosen) outer_local.push_back(local[static_cast<std::size_t>(v)]);
  sub.outer_in_parent = chosen;
  sub.graph = PlaneGraph(std::move(rot), std::move(outer_local));
  return sub;
}

std::vector<Vertex> boundary_path(std::span<const Vertex> cycle, Vertex from, Vertex to) {
  const auto n = cycle.size();
  auto it = std::find(cycle.begin(), cycle.end(), from);
  if (it == cycle.end()) throw GraphError("vertex " + vname(from) + " is not on the boundary");
  const std::size_t p = static_cast<std::size_t>(it - cycle.begin());
  int step;
  if (cycle[(p + 1) % n] == to) step = -1;
  else if (cycle[(p + n - 1) % n] == to) step = 1;
  else
    throw GraphError("vertices " + vname(from) + " and " + vname(to) +
                     " are not consecutive on the boundary");
  std::vector<Vertex> path;
  std::size_t q = p;
  for (std::size_t t = 0; t < n; ++t) {
    path.push_back(cycle[q]);
    q = (q + n + static_cast<std::size_t>(step)) % n;
  }
  return path;
}

std::string format_rot(const PlaneGraph& g) {
  std::string out = "rot n=" + std::to_string(g.vertex_count()) + " outer=";
  for (std::size_t t = 0; t < g.outer().size(); ++t)
    out += (t ? "," : "") + vname(g.outer()[t]);
  out += "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += vname(v) + ":";
    for (Vertex u : g.rotation(v)) out += " " + vname(u);
    out += "\n";
  }
  return out;
}

namespace {

int parse_vertex_id(std::string_view token, std::size_t line, int n) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("expected vertex identifier, got \"" + std::string(token) + "\"", line);
  if (n >= 0 && (value < 1 || value > n))
    throw ParseError("vertex " + std::to_string(value) + " out of range 1.." + std::to_string(n), line);
  return value;
}

std::vector<std::string_view> tokens_of(std::string_view line, char extra_sep = ' ') {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  auto is_sep = [&](char c) { return c == ' ' || c == '\t' || c == '\r' || c == extra_sep; };
  while (pos < line.size()) {
    while (pos < line.size() && is_sep(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !is_sep(line[end])) ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

}  // namespace

PlaneGraph parse_rot(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t n_line = 0;
  while (n_line < lines.size() && tokens_of(lines[n_line]).empty()) ++n_line;
  if (n_line >= lines.size()) throw ParseError("missing rot header", 1);
  const auto header = tokens_of(lines[n_line]);
  const std::size_t hl = n_line + 1;
  if (header.size() != 3 || header[0] != "rot" || header[1].substr(0, 2) != "n=" ||
      header[2].substr(0, 6) != "outer=")
    throw ParseError("expected header `rot n=<n> outer=<v1>,<v2>,...`", hl);
  const int n = parse_vertex_id(header[1].substr(2), hl, -1);
  if (n < 1) throw ParseError("n must be positive", hl);
  std::vector<Vertex> outer;
  for (auto tok : tokens_of(header[2].substr(6), ','))
    outer.push_back(parse_vertex_id(tok, hl, n) - 1);
  if (outer.size() < 3) throw ParseError("outer face needs at least 3 vertices", hl);

  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t t = n_line + 1; t < lines.size(); ++t) {
    const auto line = lines[t];
    if (tokens_of(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected `v: u1 u2 ...`", t + 1);
    const auto head = tokens_of(line.substr(0, colon));
    if (head.size() != 1) throw ParseError("expected a single vertex before ':'", t + 1);
    const int v = parse_vertex_id(head[0], t + 1, n);
    if (seen[static_cast<std::size_t>(v - 1)])
      throw ParseError("vertex " + std::to_string(v) + " listed twice", t + 1);
    seen[static_cast<std::size_t>(v - 1)] = 1;
    for (auto tok : tokens_of(line.substr(colon + 1)))
      rot[static_cast<std::size_t>(v - 1)].push_back(parse_vertex_id(tok, t + 1, n) - 1);
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw ParseError("vertex " + std::to_string(v + 1) + " has no rotation line", lines.size());
  return PlaneGraph(std::move(rot), std::move(outer));
}

}  // namespace fourcolor
