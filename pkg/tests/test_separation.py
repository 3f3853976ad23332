import random
from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from degedit.corpus import planted_instance, random_edit
from degedit.graph import EditSet, ExtendedInstance, Graph, apply_edits, degree_vector, verify_solution
from degedit.separation import (
    RED,
    Coloring,
    build_separation_graph,
    dp_solve_colored,
    planted_coloring,
    random_coloring,
    required_r,
    required_trials,
    run_dp,
)

from conftest import graphs

K3 = Graph.complete(3)


def test_random_coloring_is_deterministic():
    assert random_coloring(K3, 5) == random_coloring(K3, 5)
    assert random_coloring(Graph(), 1) == Coloring()


def test_random_coloring_frequencies():
    g = Graph.empty(10**4)
    c = random_coloring(g, 11)
    counts = Counter(c.vertex_map(g).values())
    n, p = 10**4, 1 / 3
    sd = (n * p * (1 - p)) ** 0.5
    assert all(abs(counts[col] - n / 3) <= 3 * sd for col in ("red", "yellow", "blue"))


def test_separation_graph_examples():
    assert build_separation_graph(K3, Coloring()).components == ()
    sep = build_separation_graph(K3, Coloring(red_edges=frozenset({(1, 2), (2, 3)})))
    (comp,) = sep.components
    assert comp.vertices == {1, 2, 3}
    assert comp.red_edges == ((1, 2), (2, 3))
    assert comp.red_vertices == comp.yellow_vertices == ()

    g = Graph([1, 2, 3, 4], [(1, 2), (3, 4)])
    (comp,) = build_separation_graph(g, Coloring(yellow_vertices=frozenset({3, 4}))).components
    assert comp.vertices == {3, 4} and comp.yellow_vertices == (3, 4)


def test_isolated_colored_vertices_are_components():
    g = Graph([1, 2, 3], [(1, 2)])
    sep = build_separation_graph(g, Coloring(red_vertices=frozenset({3}), yellow_vertices=frozenset({1})))
    assert [c.vertices for c in sep.components] == [{1}, {3}]
    assert sep.L == frozenset()


def test_dp_examples():
    inst = ExtendedInstance(K3, (2, 2, 2), 1, 1, 1)
    assert dp_solve_colored(inst, random_coloring(K3, 0)) == EditSet()

    inst = ExtendedInstance(K3, (1, 1, 0), 0, 2, 0)
    c = Coloring(red_edges=frozenset({(1, 2), (2, 3)}))
    assert dp_solve_colored(inst, c) == EditSet(D={(1, 2), (2, 3)})
    assert dp_solve_colored(inst, Coloring()) is None


def test_red_edge_at_red_vertex_is_not_a_deletion():
    # deleting 3 and then its own edge is not a valid edit
    g = Graph([1, 2, 3], [(1, 3), (2, 3)])
    inst = ExtendedInstance(g, (0, 0), 1, 1, 0)
    c = Coloring(red_vertices=frozenset({3}), red_edges=frozenset({(1, 3)}))
    assert dp_solve_colored(inst, c) is None


def test_formulas():
    assert required_trials(0, 7) == 1
    assert required_trials(1, 0) == 36
    assert required_trials(1, 1) == 1679616
    assert required_r(0, 5) == 0
    assert required_r(1, 1) == 16
    assert required_r(2, 3) == 200


def _planted(g, e):
    sigma = apply_edits(g, e).degree_sequence()
    return ExtendedInstance(g, sigma, *e.counts)


@st.composite
def edited_graphs(draw):
    g = draw(graphs(min_n=2, max_n=7))
    rng = random.Random(draw(st.integers(0, 10**6)))
    e = random_edit(g, rng, *(draw(st.integers(0, 2)) for _ in range(3)))
    return g, e


@settings(max_examples=300, deadline=None)
@given(edited_graphs())
def test_planted_coloring_is_solved(case):
    g, e = case
    inst = _planted(g, e)
    sol = dp_solve_colored(inst, planted_coloring(g, e))
    assert sol is not None and verify_solution(inst, sol)


def test_planted_corpus_sample():
    rng = random.Random(99)
    for _ in range(50):
        inst, hidden = planted_instance(rng)
        assert verify_solution(inst, hidden)
        sol = dp_solve_colored(inst, planted_coloring(inst.G, hidden))
        assert sol is not None and verify_solution(inst, sol)


@settings(max_examples=200, deadline=None)
@given(edited_graphs(), st.integers(0, 10**6))
def test_records_are_sound(case, seed):
    g, e = case
    inst = _planted(g, e)
    c = random_coloring(g, seed)
    table, sep = run_dp(inst, c, stop_at_target=False)
    width = max(inst.delta, g.max_degree()) + 1
    base = degree_vector(g) + (0,) * width
    bound = (inst.k + inst.delta + 1) * inst.k_vd + 2 * (inst.k_ed + inst.k_ea)
    for (tvd, ted, tea, X, vec), rec in table.items():
        # component closure
        chosen = [sep.components[i] for i in rec.I]
        assert set(rec.U) == {v for comp in chosen for v in comp.red_vertices}
        assert set(rec.D) == {x for comp in chosen for x in comp.red_edges}
        yellow = {v for comp in chosen for v in comp.yellow_vertices}
        assert all(a in yellow and b in yellow for a, b in rec.A)
        # the witness reproduces the key
        e2 = rec.edit_set()
        g2 = apply_edits(g, e2)
        assert (tvd, ted, tea) == e2.counts
        assert tvd <= inst.k_vd and ted <= inst.k_ed and tea <= inst.k_ea
        assert X == tuple(sorted(g2.degree(y) for y in yellow))
        assert all(x <= inst.delta for x in X)
        real = degree_vector(g2)
        assert vec == real + (0,) * (len(vec) - len(real))
        assert len(vec) == width
        assert all(abs(vec[i] - base[i]) <= bound for i in range(width))


@settings(max_examples=200, deadline=None)
@given(graphs(), st.integers(0, 10**6))
def test_yellow_vertices_of_different_components_are_not_adjacent(g, seed):
    c = random_coloring(g, seed)
    sep = build_separation_graph(g, c)
    owner = {v: i for i, comp in enumerate(sep.components) for v in comp.vertices}
    for u, v in g.edges:
        if u in c.yellow_vertices and v in c.yellow_vertices:
            assert owner[u] == owner[v]
        if c.vertex_color(u) == RED or c.edge_color((u, v)) == RED:
            assert (u, v) in sep.L
    covered = [v for comp in sep.components for v in comp.vertices]
    assert len(covered) == len(set(covered))
    mins = [min(comp.vertices) for comp in sep.components]
    assert mins == sorted(mins)
