import os
from pathlib import Path

import pytest

import fourcolor as fc

CATALOG = Path(os.environ.get("FOURCOLOR_CATALOG_DIR",
                              Path(__file__).resolve().parents[2] / "data" / "catalog"))


def load(name):
    return fc.parse_rot((CATALOG / f"{name}.rot").read_text())


def test_transitions():
    s = fc.LSet.start()
    assert s.strings() == ["acb"]
    assert fc.apply_set(s, 2, 3).strings() == ["acab", "acdb"]
    assert fc.apply_string("acb", 1, 2).strings() == ["abcb", "adcb"]
    assert not fc.apply_string("acbd", 1, 4)
    assert [label for label, _ in fc.successors(s)] == [(1, 2), (1, 3), (2, 3)]
    assert fc.canonicalize(fc.LSet(["adb"]), "cd") == s
    assert fc.reverse(s).strings() == ["bca"]
    assert [x.strings() for x in fc.replay(s, [(1, 3)])] == [["acb"], ["adb"]]


def test_errors_surface_as_value_errors():
    with pytest.raises(fc.FourColorError):
        fc.apply_set(fc.LSet.start(), 2, 5)
    with pytest.raises(ValueError):
        fc.parse_lset("lset k=4 l=3\nxyz\n")


def test_formats_round_trip():
    text = fc.format_lset(fc.LSet(["acdb", "acab"]))
    assert text == "lset k=4 l=4\nacab\nacdb\n"
    assert fc.format_lset(fc.parse_lset(text)) == text
    assert fc.parse_deriv(fc.format_deriv([(1, 3), (2, 4)])) == [(1, 3), (2, 4)]


def test_search():
    report = fc.bfs(fc.LSet.start(), max_depth=6, max_length=7, probe_missing_letter=True)
    assert not report.goal_found
    assert report.witness is None
    assert report.probe_failures == {"missing-letter": 0}
    assert "goal_found=false" in report.key_values()

    hit = fc.bfs(fc.LSet(["acbd"]), max_depth=1)
    assert hit.goal_found and hit.witness == [(1, 4)]
    assert fc.verify_witness(fc.LSet(["acbd"]), [(1, 4)]) == (True, "")

    states = fc.reachable_states(fc.LSet.start(), max_depth=1)
    assert [d for d, _ in states] == [0, 1, 1]


def test_graph_side():
    octa = load("octahedron")
    assert fc.validate(octa)["triangulation"]
    assert fc.separating_triangles(octa) == []
    assert fc.separating_triangles(load("stacked_k4")) == [[1, 2, 4]]
    order, labels = fc.compute_shelling_order(octa, 1, 2)
    assert order[:2] == [1, 2] and order[-1] == 3
    assert fc.check_shelling(octa, order) == (True, "")
    assert fc.derivation_from_order(octa, order) == labels
    assert fc.count_colorings(octa) == 96
    assert fc.count_colorings(load("k4"), 4, {1: "a", 2: "b"}) == 2

    graph, built_order = fc.build_from_derivation([(2, 3)])
    assert graph.vertex_count == 4
    assert fc.boundary_string_set(graph, built_order, 4).strings() == ["acab", "acdb"]
    assert fc.roundtrip_check([(2, 3), (1, 4)])
