#include <doctest.h>

#include "fixtures.hpp"
#include "fourcolor/shelling.hpp"
#include "oracles.hpp"

using namespace fourcolor;
using fixtures::catalog;

TEST_CASE("validate catalog graphs") {
  const auto k3 = validate(catalog("triangle"));
  CHECK(k3.near_triangulation());
  CHECK(k3.triangulation());
  CHECK(k3.faces == 2);

  const auto octa = validate(catalog("octahedron"));
  CHECK(octa.triangulation());
  CHECK(octa.faces == 8);
  CHECK(octa.edges == 12);

  const auto ico = validate(catalog("icosahedron"));
  CHECK(ico.triangulation());
  CHECK(ico.faces == 20);

  const auto quad = validate(catalog("k4_minus_edge"));
  CHECK(quad.near_triangulation());
  CHECK_FALSE(quad.triangulation());
  CHECK(quad.outer_face.size() == 4);
  CHECK(quad.faces == 3);
}

TEST_CASE("validate reports structural problems by vertex") {
  const auto asym = validate(parse_rot("rot n=3 outer=1,2,3\n1: 2 3\n2: 3\n3: 1 2\n"));
  CHECK_FALSE(asym.symmetric);
  REQUIRE_FALSE(asym.problems.empty());
  CHECK(asym.problems.front().find("vertex 1 lists 2") != std::string::npos);

  const auto dup = validate(parse_rot("rot n=3 outer=1,2,3\n1: 2 2 3\n2: 3 1\n3: 1 2\n"));
  CHECK_FALSE(dup.simple);

  // A path is not 2-connected.
  const auto path = validate(parse_rot("rot n=3 outer=1,2,3\n1: 2\n2: 1 3\n3: 2\n"));
  CHECK_FALSE(path.two_connected);
  CHECK_FALSE(path.near_triangulation());

  // Square with no diagonal: the inner face is a quadrilateral.
  const auto square = validate(parse_rot("rot n=4 outer=1,2,3,4\n1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n"));
  CHECK(square.two_connected);
  CHECK_FALSE(square.inner_faces_triangles);

  // Declared outer face that is not a face.
  const auto wrong = validate(parse_rot("rot n=4 outer=1,2,4\n1: 2 4\n2: 3 4 1\n3: 2 4\n4: 1 2 3\n"));
  CHECK(wrong.outer_face_found);
  const auto missing = validate(parse_rot("rot n=4 outer=1,3,2\n1: 2 4\n2: 3 4 1\n3: 2 4\n4: 1 2 3\n"));
  CHECK_FALSE(missing.outer_face_found);
}

TEST_CASE("separating triangles") {
  for (const char* name : {"octahedron", "icosahedron", "k4"}) {
    const auto g = catalog(name);
    CHECK(separating_triangles(g).empty());
    CHECK(oracle::nonfacial_triangles(g).empty());
  }
  const auto stacked = catalog("stacked_k4");
  const auto found = separating_triangles(stacked);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == std::array<Vertex, 3>{0, 1, 3});
  const auto brute = oracle::nonfacial_triangles(stacked);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == std::array<int, 3>{0, 1, 3});

  CHECK_THROWS_AS(separating_triangles(catalog("k4_minus_edge")), GraphError);
}

TEST_CASE("shelling order of the octahedron from every outer edge") {
  const auto g = catalog("octahedron");
  const auto& outer = g.outer();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const auto order = compute_shelling_order(g, outer[static_cast<std::size_t>(a)], outer[static_cast<std::size_t>(b)]);
      REQUIRE(order.order.size() == 6);
      CHECK(order.order[0] == outer[static_cast<std::size_t>(a)]);
      CHECK(order.order[1] == outer[static_cast<std::size_t>(b)]);
      CHECK(order.order[5] == outer[static_cast<std::size_t>(3 - a - b)]);
      CHECK(check_shelling(g, order.order).ok);
      REQUIRE(order.labels.size() == 3);
      const auto states = replay({LSet::start(), order.labels});
      CHECK(states.back().length() == 3);
      CHECK_FALSE(states.back().empty());
    }
}

TEST_CASE("shelling order of the icosahedron") {
  const auto g = catalog("icosahedron");
  const auto order = compute_shelling_order(g, g.outer()[0], g.outer()[1]);
  REQUIRE(order.order.size() == 12);
  CHECK(order.order.back() == g.outer()[2]);
  const auto check = check_shelling(g, order.order);
  CHECK_MESSAGE(check.ok, check.reason);
  CHECK(order.labels.size() == 9);
  CHECK(order.labels.back() == TransitionLabel{1, static_cast<int>(replay({LSet::start(), order.labels})
                                                                        .rbegin()[1].length())});
}

TEST_CASE("shelling order rejects inputs outside its domain") {
  CHECK_THROWS_WITH_AS(compute_shelling_order(catalog("stacked_k4"), 0, 1), doctest::Contains("at least 6"),
                       GraphError);
  CHECK_THROWS_AS(compute_shelling_order(catalog("k4_minus_edge"), 0, 1), GraphError);
  const auto ico = catalog("icosahedron");
  CHECK_THROWS_WITH_AS(compute_shelling_order(ico, 0, 11), doctest::Contains("not an edge of the outer face"),
                       GraphError);

  // Octahedron with a vertex stacked into an inner face: 7 vertices, separating triangle.
  const auto g = catalog("octahedron");
  const auto faces = g.faces();
  std::vector<Vertex> inner;
  for (const auto& f : faces)
    if (std::find(f.begin(), f.end(), 0) == f.end() || std::find(f.begin(), f.end(), 1) == f.end()) {
      inner = f;
      break;
    }
  REQUIRE(inner.size() == 3);
  auto rot = g.rotations();
  const Vertex x = 6;
  for (std::size_t t = 0; t < 3; ++t) {
    const Vertex a = inner[t], b = inner[(t + 1) % 3];
    auto& rb = rot[static_cast<std::size_t>(b)];
    rb.insert(std::find(rb.begin(), rb.end(), a), x);
  }
  rot.push_back({inner[0], inner[1], inner[2]});
  const PlaneGraph stacked(rot, g.outer());
  REQUIRE(validate(stacked).triangulation());
  CHECK_THROWS_WITH_AS(compute_shelling_order(stacked, 0, 1), doctest::Contains("separating triangle"), GraphError);
}

TEST_CASE("build_from_derivation examples") {
  const auto tri = build_from_derivation(std::vector<TransitionLabel>{});
  CHECK(tri.graph.vertex_count() == 3);
  CHECK(validate(tri.graph).triangulation());

  const auto k4 = build_from_derivation(std::vector<TransitionLabel>{{1, 3}});
  CHECK(k4.graph.vertex_count() == 4);
  CHECK(k4.graph.outer() == std::vector<Vertex>{0, 1, 3});
  CHECK(validate(k4.graph).triangulation());
  CHECK(derivation_from_order(k4.graph, k4.order.order).steps == std::vector<TransitionLabel>{{1, 3}});

  const auto five = build_from_derivation(std::vector<TransitionLabel>{{2, 3}, {1, 3}});
  CHECK(five.graph.vertex_count() == 5);
  const auto report = validate(five.graph);
  CHECK(report.near_triangulation());
  CHECK(report.outer_face.size() == 4);
  const auto lengths = replay({LSet::start(), five.order.labels});
  CHECK(lengths[0].length() == 3);
  CHECK(lengths[1].length() == 4);
  CHECK(lengths[2].length() == 4);  // l' = l + i + 2 - j

  CHECK_THROWS_WITH_AS(build_from_derivation(std::vector<TransitionLabel>{{1, 3}, {2, 4}}),
                       doctest::Contains("step 2"), PreconditionError);
  CHECK_THROWS_AS(build_from_derivation(DerivationScript{LSet::of({"abc"}), {}}), PreconditionError);
}

TEST_CASE("derivation_from_order inverts the construction") {
  for (const auto& script : fixtures::all_scripts(4)) {
    const auto built = build_from_derivation(script);
    const auto report = validate(built.graph);
    CHECK(report.near_triangulation());
    CHECK(static_cast<int>(report.outer_face.size()) ==
          replay({LSet::start(), script}).back().length());
    CHECK(derivation_from_order(built.graph, built.order.order).steps == script);
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto script = fixtures::random_script(rng, 1 + trial % 12);
    const auto built = build_from_derivation(script);
    CHECK(validate(built.graph).near_triangulation());
    CHECK(derivation_from_order(built.graph, built.order.order).steps == script);
    CHECK(parse_rot(format_rot(built.graph)) == built.graph);
  }
}

TEST_CASE("derivation_from_order rejects orders that break the boundary") {
  const auto g = catalog("octahedron");
  const auto order = compute_shelling_order(g, 0, 1).order;
  auto bad = order;
  std::swap(bad[3], bad[5]);  // the last outer vertex first
  const auto check = [&] { derivation_from_order(g, bad); };
  // v6 touches v1 and v2 only through non-consecutive boundary positions or too few neighbours.
  CHECK_THROWS_AS(check(), GraphError);
  CHECK_THROWS_AS(derivation_from_order(g, std::vector<Vertex>{0, 1, 0}), GraphError);
}

TEST_CASE("induced subgraph picks the face that is not inherited") {
  const auto g = catalog("icosahedron");
  const auto order = compute_shelling_order(g, 0, 1).order;
  for (int i = 3; i <= 9; ++i) {
    const auto sub = induced_subgraph(g, std::span(order).first(static_cast<std::size_t>(i)));
    const auto report = validate(sub.graph);
    CHECK(report.near_triangulation());
    const auto walk = boundary_path(sub.graph.outer(), 0, 1);
    CHECK(walk.front() == 0);
    CHECK(walk.back() == 1);
  }
}
