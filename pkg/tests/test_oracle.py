import itertools

import pytest
from hypothesis import given, settings

from degedit.corpus import ALL_OP_SETS, small_graphs
from degedit.graph import EditSet, ExtendedInstance, Graph, Instance, verify_solution
from degedit.oracle import (
    OracleTooLarge,
    brute_force_solve,
    count_solutions,
    decide,
    enumeration_bound,
    has_clique,
    has_independent_set,
    iter_solutions,
)

from conftest import extended_instances, instances
from naive_oracle import naive_count, naive_decide

K3 = Graph.complete(3)


def test_already_matching_is_empty_edit():
    for ops in ALL_OP_SETS:
        assert brute_force_solve(Instance(K3, (2, 2, 2), ops, 0)) == EditSet()


def test_two_incident_edge_deletions():
    sol = brute_force_solve(Instance(K3, (1, 1, 0), {"ed"}, 2))
    assert sol is not None and not sol.U and not sol.A and len(sol.D) == 2
    (a, b), (c, d) = sorted(sol.D)
    assert {a, b} & {c, d}
    # lexicographically first under sorted edges
    assert sol.D == {(1, 2), (1, 3)}


def test_triangle_deletion_in_k4():
    sol = brute_force_solve(Instance(Graph.complete(4), (3, 1, 1, 1), {"ed"}, 3))
    assert sol is not None and len(sol.D) == 3
    verts = set(itertools.chain.from_iterable(sol.D))
    assert len(verts) == 3


@pytest.mark.parametrize(
    "inst, count",
    [
        (Instance(K3, (2, 2, 2), {"ed"}, 0), 1),
        (Instance(K3, (1, 1, 0), {"ed"}, 2), 3),
        (Instance(Graph.empty(2), (1, 1), {"ea"}, 1), 1),
    ],
)
def test_count_solutions(inst, count):
    assert count_solutions(inst, cap=100) == count == naive_count(inst)


def test_count_saturates():
    assert count_solutions(Instance(K3, (1, 1, 0), {"ed"}, 2), cap=2) == 2


def test_cap_guard():
    inst = Instance(Graph.complete(8), (7,) * 8, {"vd", "ed", "ea"}, 6)
    assert enumeration_bound(inst) > 1000
    with pytest.raises(OracleTooLarge, match="instance too large for oracle"):
        brute_force_solve(inst, cap=1000)


def test_solutions_come_in_canonical_order():
    inst = Instance(Graph.cycle(4), (1, 1, 1, 1), {"ed", "ea"}, 2)
    sols = list(iter_solutions(inst))
    assert sols == sorted(sols, key=EditSet.sort_key)
    assert brute_force_solve(inst) == sols[0]


@settings(max_examples=300, deadline=None)
@given(instances(max_n=4))
def test_agrees_with_naive_oracle(inst):
    sol = brute_force_solve(inst)
    assert (sol is not None) == naive_decide(inst)
    if sol is not None:
        assert verify_solution(inst, sol)


@settings(max_examples=150, deadline=None)
@given(extended_instances(max_n=4))
def test_extended_counts_match_naive(inst):
    assert count_solutions(inst, cap=10**6) == naive_count(inst)


@settings(max_examples=150, deadline=None)
@given(instances(max_n=4))
def test_instance_is_union_of_splits(inst):
    assert decide(inst) == any(decide(s) for s in inst.splits())


def test_clique_and_independent_set_helpers():
    assert has_clique(Graph.complete(4), 4)
    assert not has_clique(Graph.cycle(5), 3)
    assert has_independent_set(Graph.cycle(5), 2)
    assert not has_independent_set(Graph.cycle(5), 3)
    assert has_clique(Graph.empty(0), 0)


def test_small_graph_atlas_counts():
    # 1 + 1 + 2 + 4 + 11 + 34 isomorphism classes on 0..5 vertices
    assert len(small_graphs(5)) == 53
