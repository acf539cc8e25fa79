from __future__ import annotations

import pytest

from lotus.complexes import Lotus, StructureError, new_lotus
from lotus.fixtures import (
    branch_lotus,
    char2_lotus,
    cusp_lotus,
    three_branch_lotus,
)


def test_new_lotus_shape():
    lotus = new_lotus("L", "L1")
    assert len(lotus.vertices) == 2
    assert lotus.base_edges == [(0, 1)]
    assert not lotus.petals
    renamed = new_lotus("x", "y")
    assert renamed.label(renamed.initial_vertex) == "x"
    with pytest.raises(StructureError):
        new_lotus("L", "L")


def test_single_petal():
    lotus = new_lotus("L", "L1")
    apex = lotus.add_petal("L", "L1")
    assert len(lotus.vertices) == 3
    assert len(lotus.edges()) == 3
    assert len(lotus.petals) == 1
    assert lotus.label(apex) == "E0"


def test_add_petal_preconditions():
    lotus = cusp_lotus()
    # internal edge: the base of the second petal
    with pytest.raises(StructureError):
        lotus.add_petal("L1", "E0")
    with pytest.raises(StructureError):
        lotus.add_petal("L", "E2")  # not an edge


def test_add_base_edge_preconditions():
    lotus = cusp_lotus()
    with pytest.raises(StructureError):
        lotus.add_base_edge("L1", "Z")  # not exceptional
    lotus.add_base_edge("E0", "Z")  # allowed: second base edge elsewhere
    lotus.validate()


def test_two_base_edges_at_same_vertex():
    lotus = cusp_lotus()
    lotus.add_base_edge("E2", "B1", arrowhead=True)
    lotus.add_base_edge("E2", "B2")
    lotus.validate()
    assert len([e for e in lotus.base_edges if e[0] == lotus.vertex_id("E2")]) == 3


def test_cusp_taxonomy():
    lotus = cusp_lotus()
    kinds = lotus.classify_edges()
    lab = lotus.label

    def edge_labels(edges):
        return {frozenset((lab(u), lab(v))) for u, v in edges}

    assert edge_labels(kinds["base"]) == {frozenset(("L", "L1")), frozenset(("E2", "A"))}
    assert edge_labels(kinds["internal"]) == {
        frozenset(("L1", "E0")),
        frozenset(("E0", "E1")),
    }
    assert edge_labels(kinds["lateral"]) == {
        frozenset(("L", "E0")),
        frozenset(("E0", "E2")),
        frozenset(("E2", "E1")),
        frozenset(("E1", "L1")),
    }
    boundary = lotus.lateral_boundary()
    edge_count = sum(len(v) for v in boundary.values()) // 2
    assert edge_count == 5  # the four lateral edges plus [E2 A]
    assert [lotus.label(v) for v in lotus.rupture_vertices()] == ["E2"]
    assert len(lotus.membranes()) == 2


def test_branch_fixture_counts():
    lotus = branch_lotus()
    kinds = lotus.classify_edges()
    assert len(kinds["base"]) == 3
    assert len(kinds["lateral"]) == 9
    assert len(kinds["internal"]) == 5
    assert len(lotus.rupture_vertices()) == 2
    lotus.validate()


def test_three_branch_fixture_counts():
    lotus = three_branch_lotus()
    kinds = lotus.classify_edges()
    assert len(kinds["base"]) == 6
    assert len(kinds["lateral"]) == 13
    assert len(kinds["internal"]) == 7
    assert len(lotus.rupture_vertices()) == 5
    lotus.validate()


def test_proximity_graph_cusp():
    lotus = cusp_lotus()
    adj = lotus.proximity_graph()
    lab = lotus.label
    named = {lab(v): sorted(lab(w) for w in nb) for v, nb in adj.items()}
    assert named == {
        "E0": ["E1", "E2"],
        "E1": ["E0", "E2"],
        "E2": ["E0", "E1"],
    }


def test_proximity_graph_single_petal():
    lotus = new_lotus("L", "L1")
    lotus.add_petal("L", "L1")
    adj = lotus.proximity_graph()
    assert list(adj) == [2]
    assert adj[2] == []


def test_proximity_graph_branch_fixture():
    lotus = branch_lotus()
    adj = lotus.proximity_graph()
    assert len(adj) == 7
    e3 = lotus.vertex_id("E3")  # the vertex with lambda/ord pair (6, 2)
    assert len(adj[e3]) == 4


def test_json_round_trip():
    for build in (new_lotus("L", "L1"), cusp_lotus(), three_branch_lotus(), char2_lotus()):
        text = build.to_json()
        again = Lotus.from_json(text)
        assert again.to_json() == text
        assert again.isomorphic(build)
        assert again.classify_edges() == build.classify_edges()


def test_triangle_condition_on_fixtures():
    for build in (cusp_lotus(), branch_lotus(), three_branch_lotus(), char2_lotus()):
        build.validate()  # includes the three-adjacent-vertices condition


def test_lateral_boundary_is_tree():
    for build in (cusp_lotus(), branch_lotus(), three_branch_lotus(), char2_lotus()):
        adj = build.lateral_boundary()
        edges = sum(len(v) for v in adj.values()) // 2
        assert edges == len(adj) - 1


def test_membranes_have_one_base_edge_each():
    lotus = three_branch_lotus()
    membranes = lotus.membranes()
    assert len(membranes) == len(lotus.base_edges)
    all_petals = sorted(p for m in membranes for p in m["petals"])
    assert all_petals == list(range(len(lotus.petals)))
