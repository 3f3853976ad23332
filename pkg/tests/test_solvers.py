import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degedit.corpus import planted_instance
from degedit.graph import EditSet, ExtendedInstance, Graph, Instance, verify_solution
from degedit.oracle import decide
from degedit.solvers import (
    DerandomizationTooLarge,
    derandomized_family_size,
    plan_family,
    solve_derandomized,
    solve_randomized,
    sparse_colorings,
    sparse_family_size,
)

from conftest import instances

K3 = Graph.complete(3)
K3_ED = Instance(K3, (1, 1, 0), {"ed"}, 2)
K3_NO = Instance(K3, (3, 3, 3), {"ed"}, 1)


def test_randomized_examples():
    res = solve_randomized(Instance(K3, (2, 2, 2), {"ea"}, 0), trials=1)
    assert res.solution == EditSet() and res.colorings == 1
    res = solve_randomized(K3_ED, trials=10**4, rng_seed=7)
    assert res.yes and verify_solution(K3_ED, res.solution) and len(res.solution.D) == 2
    res = solve_randomized(K3_NO, trials=10)
    assert res.solution is None and res.decided


def test_randomized_no_is_flagged_when_trials_are_short():
    res = solve_randomized(K3_ED, trials=0)
    assert res.solution is None and not res.decided


def test_randomized_is_deterministic_per_seed():
    a = solve_randomized(K3_ED, trials=500, rng_seed=3)
    b = solve_randomized(K3_ED, trials=500, rng_seed=3)
    assert a == b


def test_derandomized_examples():
    assert solve_derandomized(Instance(K3, (2, 2, 2), {"ed"}, 0)).solution == EditSet()
    for family in ("sparse", "universal", "auto"):
        res = solve_derandomized(K3_ED, family=family)
        assert res.yes and verify_solution(K3_ED, res.solution)
        assert solve_derandomized(K3_NO, family=family).solution is None


def test_universal_family_uses_r_equal_m_on_tiny_graphs():
    name, size, m, r = plan_family(ExtendedInstance(K3, (1, 1, 0), 0, 2, 0), "universal")
    assert (name, m, r) == ("universal", 6, 6)


def test_derandomization_cap():
    inst = Instance(Graph.complete(8), (3,) * 8, {"ed"}, 16)
    with pytest.raises(DerandomizationTooLarge, match="parameters exceed derandomization cap"):
        solve_derandomized(inst, cap=100)


def test_sparse_family_covers_every_planted_coloring():
    rng = random.Random(5)
    for _ in range(30):
        inst, hidden = planted_instance(rng, max_n=8, max_k=3, max_delta=3)
        cs = list(sparse_colorings(inst))
        assert len(cs) <= sparse_family_size(inst)
        want = (frozenset(hidden.U), frozenset(v for a in hidden.A for v in a), frozenset(hidden.D))
        assert any((c.red_vertices, c.yellow_vertices, c.red_edges) == want for c in cs)


@settings(max_examples=300, deadline=None)
@given(instances(max_n=5))
def test_derandomized_matches_oracle(inst):
    res = solve_derandomized(inst)
    assert res.yes == decide(inst)
    if res.yes:
        assert verify_solution(inst, res.solution)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=4, max_k=2))
def test_universal_family_matches_oracle(inst):
    res = solve_derandomized(inst, family="universal")
    assert res.yes == decide(inst)


@settings(max_examples=100, deadline=None)
@given(instances(max_n=5), st.integers(0, 1000))
def test_randomized_is_one_sided(inst, seed):
    res = solve_randomized(inst, trials=30, rng_seed=seed)
    if res.yes:
        assert verify_solution(inst, res.solution)
    elif not decide(inst):
        assert res.solution is None


def test_family_size_is_zero_for_parity_failures():
    assert derandomized_family_size(Instance(K3, (1, 1, 1), {"ed", "ea"}, 2)) == 0
