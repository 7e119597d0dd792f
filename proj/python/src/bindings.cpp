#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourcolor/coloring.hpp"
#include "fourcolor/search.hpp"
#include "fourcolor/shelling.hpp"
#include "fourcolor/text_format.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace fourcolor;

namespace {

// Python sees 1-based vertex identifiers, as in the .rot format.
std::vector<int> one_based(const std::vector<Vertex>& vs) {
  std::vector<int> out;
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::vector<Vertex> zero_based(const std::vector<int>& vs) {
  std::vector<Vertex> out;
  for (int v : vs) out.push_back(v - 1);
  return out;
}

std::vector<TransitionLabel> labels_from(const std::vector<std::pair<int, int>>& steps) {
  std::vector<TransitionLabel> out;
  for (auto [i, j] : steps) out.push_back({i, j});
  return out;
}

std::vector<std::pair<int, int>> labels_to(const std::vector<TransitionLabel>& steps) {
  std::vector<std::pair<int, int>> out;
  for (auto s : steps) out.emplace_back(s.i, s.j);
  return out;
}

LSet make_lset(const std::vector<std::string>& members, int k, std::optional<int> length) {
  if (!length && members.empty()) throw PreconditionError("an empty LSet needs an explicit length");
  const int l = length ? *length : static_cast<int>(members.front().size());
  return LSet::from_strings(Alphabet(k), l, members);
}

void bind_stringset(py::module_& m) {
  py::class_<LSet>(m, "LSet")
      .def(py::init(&make_lset), "members"_a, "k"_a = 4, "length"_a = py::none())
      .def_static("start", [](int k) { return LSet::start(Alphabet(k)); }, "k"_a = 4)
      .def_property_readonly("length", &LSet::length)
      .def_property_readonly("k", [](const LSet& s) { return s.alphabet().size(); })
      .def("strings", &LSet::strings)
      .def("__len__", &LSet::size)
      .def("__bool__", [](const LSet& s) { return !s.empty(); })
      .def("__contains__", [](const LSet& s, const std::string& w) {
        return static_cast<int>(w.size()) == s.length() && s.contains(ColorString::parse(w, s.alphabet()));
      })
      .def("__eq__", [](const LSet& a, const LSet& b) { return a == b; })
      .def("__hash__", [](const LSet& s) { return std::hash<LSet>{}(s); })
      .def("__repr__", [](const LSet& s) { return "LSet(" + s.str() + ", l=" + std::to_string(s.length()) + ")"; });

  m.def("apply_string", [](const std::string& s, int i, int j, int k) {
    return apply_string(ColorString::parse(s, Alphabet(k)), {i, j});
  }, "s"_a, "i"_a, "j"_a, "k"_a = 4);
  m.def("apply_set", [](const LSet& set, int i, int j) { return apply_set(set, {i, j}); }, "set"_a, "i"_a, "j"_a);
  m.def("successors", [](const LSet& set) {
    std::vector<std::pair<std::pair<int, int>, LSet>> out;
    for (auto& [label, next] : successors(set)) out.push_back({{label.i, label.j}, next});
    return out;
  });
  m.def("replay", [](const LSet& start, const std::vector<std::pair<int, int>>& steps) {
    return replay({start, labels_from(steps)});
  }, "start"_a, "steps"_a);
  m.def("permute", [](const LSet& set, const std::vector<int>& perm) {
    return permute(set, LetterPermutation(perm.begin(), perm.end()));
  });
  m.def("reverse", &reverse);
  m.def("canonicalize", [](const LSet& set, const std::string& group) {
    return canonicalize(set, parse_symmetry_group(group));
  }, "set"_a, "group"_a = "cd");

  m.def("format_lset", &format_lset);
  m.def("parse_lset", [](const std::string& text) { return parse_lset(text); });
  m.def("format_deriv", [](const std::vector<std::pair<int, int>>& steps) { return format_deriv(labels_from(steps)); });
  m.def("parse_deriv", [](const std::string& text) { return labels_to(parse_deriv(text)); });
}

void bind_search(py::module_& m) {
  py::class_<SearchReport>(m, "SearchReport")
      .def_readonly("states_per_depth", &SearchReport::states_per_depth)
      .def_readonly("transitions_expanded", &SearchReport::transitions_expanded)
      .def_readonly("pruned_by_length", &SearchReport::pruned_by_length)
      .def_readonly("goal_found", &SearchReport::goal_found)
      .def_readonly("goal_depth", &SearchReport::goal_depth)
      .def_property_readonly("witness", [](const SearchReport& r) -> std::optional<std::vector<std::pair<int, int>>> {
        if (!r.witness) return std::nullopt;
        return labels_to(r.witness->steps);
      })
      .def_property_readonly("probe_failures", [](const SearchReport& r) {
        py::dict d;
        for (const auto& p : r.probes) d[py::str(p.id)] = p.failed;
        return d;
      })
      .def_readonly("truncated_depth", &SearchReport::truncated_depth)
      .def_readonly("truncated_length", &SearchReport::truncated_length)
      .def_readonly("truncated_memory", &SearchReport::truncated_memory)
      .def("total_states", &SearchReport::total_states)
      .def("key_values", &SearchReport::key_values)
      .def("table", &SearchReport::table);

  auto config = [](int max_depth, int max_length, std::uint64_t max_states, const std::string& canon,
                   bool probe, int k) {
    SearchConfig c;
    c.max_depth = max_depth;
    c.max_length = max_length;
    c.max_states = max_states;
    c.canon = parse_symmetry_group(canon);
    c.alphabet = Alphabet(k);
    if (probe) c.probes.push_back(missing_letter_probe());
    return c;
  };

  m.def("bfs", [config](const LSet& start, int max_depth, int max_length, std::uint64_t max_states,
                        const std::string& canon, bool probe_missing_letter) {
    py::gil_scoped_release release;
    return bfs(start, config(max_depth, max_length, max_states, canon, probe_missing_letter,
                             start.alphabet().size()));
  }, "start"_a, "max_depth"_a = 6, "max_length"_a = 7, "max_states"_a = 50'000'000, "canon"_a = "cd",
     "probe_missing_letter"_a = false);
  m.def("reachable_states", [config](const LSet& start, int max_depth, int max_length, const std::string& canon) {
    std::vector<std::pair<int, LSet>> out;
    for (auto& s : reachable_states(start, config(max_depth, max_length, 50'000'000, canon, false,
                                                  start.alphabet().size())))
      out.emplace_back(s.depth, std::move(s.state));
    return out;
  }, "start"_a, "max_depth"_a = 6, "max_length"_a = 7, "canon"_a = "cd");
  m.def("check_probe_missing_letter", &check_probe_missing_letter);
  m.def("verify_witness", [](const LSet& start, const std::vector<std::pair<int, int>>& steps) {
    const auto v = verify_witness(start, labels_from(steps));
    return std::make_pair(v.valid, v.reason);
  }, "start"_a, "steps"_a);
}

void bind_triangulation(py::module_& m) {
  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def_property_readonly("vertex_count", &PlaneGraph::vertex_count)
      .def_property_readonly("edge_count", &PlaneGraph::edge_count)
      .def_property_readonly("outer", [](const PlaneGraph& g) { return one_based(g.outer()); })
      .def("rotation", [](const PlaneGraph& g, int v) { return one_based(g.rotation(v - 1)); })
      .def("__eq__", [](const PlaneGraph& a, const PlaneGraph& b) { return a == b; })
      .def("__repr__", [](const PlaneGraph& g) { return format_rot(g); });

  m.def("parse_rot", [](const std::string& text) { return parse_rot(text); });
  m.def("format_rot", &format_rot);
  m.def("validate", [](const PlaneGraph& g) {
    const auto r = validate(g);
    py::dict d;
    d["near_triangulation"] = r.near_triangulation();
    d["triangulation"] = r.triangulation();
    d["two_connected"] = r.two_connected;
    d["euler"] = r.euler;
    d["faces"] = r.faces;
    d["edges"] = r.edges;
    d["outer_face"] = one_based(r.outer_face);
    d["problems"] = r.problems;
    return d;
  });
  m.def("separating_triangles", [](const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& t : separating_triangles(g)) out.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    return out;
  });
  m.def("compute_shelling_order", [](const PlaneGraph& g, int v1, int v2) {
    const auto s = compute_shelling_order(g, v1 - 1, v2 - 1);
    return std::make_pair(one_based(s.order), labels_to(s.labels));
  }, "graph"_a, "v1"_a, "v2"_a);
  m.def("check_shelling", [](const PlaneGraph& g, const std::vector<int>& order) {
    const auto c = check_shelling(g, zero_based(order));
    return std::make_pair(c.ok, c.reason);
  });
  m.def("derivation_from_order", [](const PlaneGraph& g, const std::vector<int>& order) {
    return labels_to(derivation_from_order(g, zero_based(order)).steps);
  });
  m.def("build_from_derivation", [](const std::vector<std::pair<int, int>>& steps) {
    auto c = build_from_derivation(labels_from(steps));
    return std::make_pair(std::move(c.graph), one_based(c.order.order));
  });
  m.def("count_colorings", [](const PlaneGraph& g, int k, const std::map<int, std::string>& seed) {
    ColoringSeed s;
    const Alphabet alphabet(k);
    for (const auto& [v, letter] : seed) {
      if (letter.size() != 1) throw PreconditionError("seed letters are single characters");
      s.emplace_back(v - 1, alphabet.parse(letter[0]));
    }
    py::gil_scoped_release release;
    return count_colorings(g, s, alphabet);
  }, "graph"_a, "k"_a = 4, "seed"_a = std::map<int, std::string>{});
  m.def("boundary_string_set", [](const PlaneGraph& g, const std::vector<int>& order, int i, int k) {
    return boundary_string_set(g, zero_based(order), i, Alphabet(k));
  }, "graph"_a, "order"_a, "i"_a, "k"_a = 4);
  m.def("roundtrip_check", [](const std::vector<std::pair<int, int>>& steps, int k) {
    return roundtrip_check({LSet::start(Alphabet(k)), labels_from(steps)}).ok;
  }, "steps"_a, "k"_a = 4);
}

}  // namespace

PYBIND11_MODULE(_fourcolor, m) {
  m.doc() = "String-set automaton for four-coloring plane near-triangulations";
  static py::exception<Error> error(m, "FourColorError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });
  bind_stringset(m);
  bind_search(m);
  bind_triangulation(m);
}
