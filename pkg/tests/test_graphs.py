import math

import pytest

from matsplit import (SimpleGraph, catalog_graph, complete_bipartite,
                      complete_graph, cycle_matroid, element_split,
                      graph_girth, petersen_graph, point_split,
                      reduce_to_cubic, slater_check, to_dot,
                      vertex_connectivity, wheel_graph)
from matsplit.errors import (DegreeTooSmall, DuplicateLabel, EdgeNotAtV,
                             EmptyT, HypothesisViolated, InvalidArguments,
                             NotThreeConnected, TooFewVertices, UnknownLabel)

from conftest import cols_of, graph_data
from oracles import (brute_bonds, brute_circuits, brute_cycles, brute_girth,
                     brute_vertex_connectivity)


def test_simple_graph_validation():
    with pytest.raises(DuplicateLabel):
        SimpleGraph("g", ("x", "x"), ())
    with pytest.raises(UnknownLabel):
        SimpleGraph("g", ("x",), (("x", "y", "e"),))
    with pytest.raises(InvalidArguments):
        SimpleGraph("g", ("x", "y"), (("x", "x", "e"),))
    with pytest.raises(DuplicateLabel):
        SimpleGraph("g", ("x", "y", "z"),
                    (("x", "y", "e"), ("y", "z", "e")))
    with pytest.raises(InvalidArguments):
        SimpleGraph("g", ("x", "y"), (("x", "y", "e"), ("y", "x", "f")))


def test_accessors():
    g = catalog_graph("K4")
    assert g.degree("1") == 3
    assert set(g.neighbors("1")) == {"2", "3", "4"}
    assert g.endpoints("12") == ("1", "2")
    assert g.incident("3") == ("13", "23", "34")
    assert g.is_connected()
    with pytest.raises(UnknownLabel):
        g.endpoints("99")


@pytest.mark.parametrize("name,kappa,girth", [
    ("K4", 3, 3), ("K5", 4, 3), ("K33", 3, 4), ("K44", 4, 4),
    ("PETERSEN", 3, 5), ("Q3", 3, 4), ("W3", 3, 3), ("W5", 3, 3),
])
def test_connectivity_and_girth_golden(name, kappa, girth):
    g = catalog_graph(name)
    assert vertex_connectivity(g) == kappa
    assert graph_girth(g) == girth


@pytest.mark.parametrize("name", ["K4", "K33", "W4", "Q3"])
def test_graph_invariants_match_oracles(name):
    g = catalog_graph(name)
    verts, edges = graph_data(g)
    assert vertex_connectivity(g) == brute_vertex_connectivity(verts, edges)
    assert graph_girth(g) == brute_girth(verts, edges)


def test_disconnected_and_tiny_graphs():
    g = SimpleGraph("two", ("x", "y"), ())
    assert vertex_connectivity(g) == 0
    assert graph_girth(g) == math.inf
    with pytest.raises(TooFewVertices):
        vertex_connectivity(SimpleGraph("one", ("x",), ()))


def test_cycle_matroid_circuits_are_graph_cycles():
    for name in ("K4", "K33", "W4"):
        g = catalog_graph(name)
        M = cycle_matroid(g)
        verts, edges = graph_data(g)
        assert {frozenset(c) for c in M.circuits()} == brute_cycles(verts, edges)
        assert {frozenset(c) for c in M.cocircuits()} == brute_bonds(verts, edges)
        assert M.rank == len(verts) - 1
        assert M.name == f"M({name})"


def test_point_split_structure():
    g = catalog_graph("K5")
    res = point_split(g, "1", ["12", "13"])
    s = res.graph
    assert res.bridge_edge == "a"
    assert res.u in s.vertices and res.w in s.vertices
    assert "1" not in s.vertices
    assert set(s.incident(res.u)) == {"12", "13", "a"}
    assert set(s.incident(res.w)) == {"14", "15", "a"}
    assert len(s.edges) == len(g.edges) + 1
    # all other incidences untouched
    assert s.endpoints("23") == g.endpoints("23")


def test_point_split_guards():
    g = catalog_graph("K4")
    with pytest.raises(EmptyT):
        point_split(g, "1", [])
    with pytest.raises(UnknownLabel):
        point_split(g, "9", ["12"])
    with pytest.raises(EdgeNotAtV):
        point_split(g, "1", ["34"])
    # deg(v) = 3 < 2|T| = 4
    with pytest.raises(DegreeTooSmall):
        point_split(g, "1", ["12", "13"])
    with pytest.raises(DegreeTooSmall):
        point_split(g, "1", ["12", "13", "14"])


def test_point_split_matches_element_split():
    # the central identity: splitting the graph then taking its cycle
    # matroid equals splitting the cycle matroid
    cases = [("K5", "1", ["12", "13"]),
             ("K5", "2", ["12"]),
             ("K33", "a1", ["a1b2"]),
             ("K46", "b1", ["a1b1", "a2b1"]),
             ("W5", "h", ["hr1", "hr3"]),
             ("PETERSEN", "o1", ["o1o2"])]
    for name, v, T in cases:
        g = catalog_graph(name)
        res = point_split(g, v, T)
        lhs = cycle_matroid(res.graph)
        rhs = element_split(cycle_matroid(g), T).result
        assert lhs.equals(rhs), (name, v, T)


def test_slater_check_passes_on_k5():
    rep = slater_check(catalog_graph("K5"), 3, "1", ["12", "13"])
    assert rep.passed
    assert rep.split_connectivity_ok
    assert rep.bridge_identity_ok
    assert rep.cocircuit_condition_ok
    assert rep.t_set == frozenset(["12", "13"])


def test_slater_check_rejects_bad_hypotheses():
    g = catalog_graph("K5")
    with pytest.raises(HypothesisViolated):
        slater_check(g, 3, "1", ["12"])          # |T| != n-1
    with pytest.raises(HypothesisViolated):
        slater_check(g, 3, "1", ["12", "34"])    # edge not at v
    with pytest.raises(HypothesisViolated):
        slater_check(catalog_graph("K4"), 3, "1", ["12", "13"])  # degree
    with pytest.raises(HypothesisViolated):
        slater_check(catalog_graph("K33"), 4, "a1", ["a1b1", "a1b2", "a1b3"])
    with pytest.raises(InvalidArguments):
        slater_check(g, 1, "1", [])


def test_reduce_to_cubic_step_counts():
    for name, want in (("K5", 5), ("K44", 8), ("K33", 0), ("PETERSEN", 0)):
        g = catalog_graph(name)
        # analytic step count: sum of max(deg - 3, 0)
        predicted = sum(max(g.degree(v) - 3, 0) for v in g.vertices)
        assert predicted == want
        steps, final = reduce_to_cubic(g)
        assert len(steps) == want
        assert all(final.degree(v) == 3 for v in final.vertices)
        assert vertex_connectivity(final) >= 3
        assert graph_girth(final) >= 3


def test_reduce_to_cubic_intermediates_stay_3_connected():
    g = catalog_graph("K5")
    steps, final = reduce_to_cubic(g)
    for s in steps:
        assert vertex_connectivity(s.graph) >= 3
    assert {s.bridge_edge for s in steps} == {"a1", "a2", "a3", "a4", "a5"}


def test_reduce_to_cubic_needs_3_connected():
    path = SimpleGraph("p", ("x", "y", "z"),
                       (("x", "y", "e1"), ("y", "z", "e2")))
    with pytest.raises(NotThreeConnected):
        reduce_to_cubic(path)


def test_constructors():
    assert len(complete_graph(5).edges) == 10
    assert len(complete_bipartite(3, 3).edges) == 9
    assert len(wheel_graph(4).edges) == 8
    assert len(petersen_graph().edges) == 15
    k2 = complete_graph(2)
    assert k2.edges == (("1", "2", "12"),)


def test_to_dot_mentions_every_edge():
    g = catalog_graph("K4")
    dot = to_dot(g)
    assert dot.startswith("graph")
    for _, _, lab in g.edges:
        assert lab in dot
