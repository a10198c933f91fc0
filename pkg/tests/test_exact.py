import random

import pytest

from compnum.certificate import Certificate
from compnum.errors import BudgetExhausted
from compnum.exact import SolveBudget, exact_k, feasible
from compnum.graph import Graph
from compnum.holes import enumerate_holes, is_chordal
from compnum.scan import labeled_graphs, random_graph
from compnum.verifier import competition_graph, is_acyclic, verify_certificate

from conftest import make
from oracles import brute_competition_number


def _accepts(g, d, iso):
    return verify_certificate(g, Certificate(g, len(iso), d, tuple(iso))).accepted


def test_k2_examples():
    k2 = make(["uv"])
    assert feasible(k2, 0) is None
    d, iso = feasible(k2, 1)
    assert iso == ("_z0",) and d.arcs == {("u", "_z0"), ("v", "_z0")}


def test_c4_examples(c4):
    assert feasible(c4, 1) is None
    d, iso = feasible(c4, 2)
    assert _accepts(c4, d, iso)


def test_edgeless():
    g = Graph(["a", "b", "c"])
    k, d, iso = exact_k(g)
    assert k == 0 and not d.arcs and iso == ()
    assert exact_k(Graph())[0] == 0


def test_chordal_graphs_without_isolated_vertices_need_one():
    for n in range(2, 7):
        for g in labeled_graphs(n):
            if g.num_edges() and all(g.degree(v) for v in g.vertices) and is_chordal(g):
                assert exact_k(g)[0] == 1


def test_isolated_vertex_can_serve_as_prey():
    # K2 plus an isolated vertex is already a competition graph
    assert exact_k(make(["ab"], ["c"]))[0] == 0


def test_matches_brute_force_on_all_small_graphs():
    for n in range(1, 6):
        for g in labeled_graphs(n):
            want = brute_competition_number(g.vertices, [tuple(e) for e in g.edges()])
            k, d, iso = exact_k(g)
            assert k == want
            assert _accepts(g, d, iso)


@pytest.mark.slow
def test_matches_brute_force_on_six_vertex_sample():
    rng = random.Random(6)
    graphs = list(labeled_graphs(6))
    for g in rng.sample(graphs, 150):
        want = brute_competition_number(g.vertices, [tuple(e) for e in g.edges()])
        assert exact_k(g)[0] == want


def test_witness_is_acyclic_and_exact():
    rng = random.Random(8)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        k, d, iso = exact_k(g)
        assert is_acyclic(d) is not None
        assert competition_graph(d) == g.with_isolated(iso)


def test_monotone_in_k():
    rng = random.Random(9)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        k = exact_k(g)[0]
        for j in range(k + 3):
            assert (feasible(g, j) is not None) == (j >= k)


def test_fresh_names_avoid_collisions():
    g = make(["ab"], ["_z0"])
    k, d, iso = exact_k(g)
    assert k == 0
    g = make(["_z0 _z1".split()])
    d, iso = feasible(g, 1)
    assert iso == ("_z2",)


def test_budget_errors():
    cells = [f"{i}{j}" for i in range(3) for j in range(3)]
    rook = Graph((), [(a, b) for a in cells for b in cells if a < b and (a[0] == b[0] or a[1] == b[1])])
    with pytest.raises(BudgetExhausted):
        exact_k(rook, SolveBudget(node_limit=2))
    with pytest.raises(BudgetExhausted):
        exact_k(rook, SolveBudget(max_k=1))
    with pytest.raises(ValueError):
        SolveBudget(max_k=-1)
    with pytest.raises(ValueError):
        SolveBudget(node_limit=0)
    with pytest.raises(ValueError):
        feasible(rook, -1)


def test_hole_bound_on_random_graphs():
    rng = random.Random(10)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.2, 0.8))
        holes, capped = enumerate_holes(g, 2)
        if not capped:
            assert exact_k(g)[0] <= len(holes) + 1
