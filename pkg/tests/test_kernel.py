import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degedit.graph import DegreeSequence, EditSet, Graph, Instance, verify_solution
from degedit.kernel import KernelError, KernelResult, Outcome, kernelize_edge_addition, lift_kernel_solution, size_bound
from degedit.oracle import brute_force_solve, decide, iter_solutions

from conftest import graphs

SIX = Instance(Graph.empty(6), (1, 1, 0, 0, 0, 0), {"ea"}, 1)


def test_isolated_vertices_example():
    res = kernelize_edge_addition(SIX)
    assert isinstance(res, KernelResult)
    kg = res.kernel.G
    assert kg.n == 7 and set(kg.edges) == {(5, 6), (5, 7), (6, 7)}
    assert res.kernel.sigma == DegreeSequence((2, 2, 2, 1, 1, 0, 0))
    assert res.kernel.k == 1 and res.gadget_vertices == (5, 6, 7)
    assert res.w_sets[0] == (1, 2, 3, 4)
    assert decide(SIX) and decide(res.kernel)

    sol = brute_force_solve(res.kernel)
    lifted = lift_kernel_solution(res, sol)
    assert lifted == EditSet(A={(1, 2)})
    assert verify_solution(SIX, lifted)


def test_pass_through_and_no():
    assert kernelize_edge_addition(Instance(Graph.complete(3), (2, 2, 2), {"ea"}, 1)) is Outcome.UNCHANGED
    assert lift_kernel_solution(Outcome.UNCHANGED, EditSet()) == EditSet()
    assert kernelize_edge_addition(Instance(Graph.path(3), (1, 1, 1), {"ea"}, 1)) is Outcome.NO


def test_rejects_other_operations():
    with pytest.raises(KernelError):
        kernelize_edge_addition(Instance(Graph.empty(3), (0, 0, 0), {"ea", "ed"}, 1))


def test_gadget_edge_is_rejected():
    res = kernelize_edge_addition(SIX)
    with pytest.raises(KernelError):
        lift_kernel_solution(res, EditSet(A={(1, 5)}))
    with pytest.raises(KernelError):
        lift_kernel_solution(Outcome.NO, EditSet())


def test_attachments_follow_lost_neighbours():
    # a long cycle keeps six vertices; the two path ends each lost one neighbour
    inst = Instance(Graph.cycle(10), (2,) * 10, {"ea"}, 1)
    res = kernelize_edge_addition(inst)
    assert isinstance(res, KernelResult)
    assert res.w_sets[2] == (1, 2, 3, 4, 5, 6)
    kept = set(res.kept_vertices.values())
    for kv, ov in res.kept_vertices.items():
        lost = sum(1 for w in inst.G.neighbors(ov) if w not in kept)
        gadget_nbrs = sorted(set(res.kernel.G.neighbors(kv)) & set(res.gadget_vertices))
        assert gadget_nbrs == list(res.gadget_vertices[:lost])
    assert all(res.kernel.G.degree(v) >= inst.delta + 1 for v in res.gadget_vertices)


@st.composite
def padded_instances(draw):
    """Edge-addition instances with large degree classes so the kernel actually fires."""
    g = draw(graphs(max_n=5))
    extra = draw(st.integers(0, 8))
    g = g.add_vertices(range(g.n + 1, g.n + extra + 1))
    rng = random.Random(draw(st.integers(0, 10**6)))
    k = draw(st.integers(1, 2))
    non = list(g.non_edges())
    added = rng.sample(non, min(len(non), draw(st.integers(0, k))))
    sigma = list(g.add_edges(added).degree_sequence())
    if draw(st.booleans()) and sigma:
        i = rng.randrange(len(sigma))
        sigma[i] = max(0, sigma[i] + rng.choice((-1, 1)))
    return Instance(g, sigma, {"ea"}, k)


@settings(max_examples=200, deadline=None)
@given(padded_instances())
def test_kernel_is_equivalent(inst):
    res = kernelize_edge_addition(inst)
    yes = decide(inst)
    if res is Outcome.NO:
        assert not yes
        return
    if res is Outcome.UNCHANGED:
        return
    kern = res.kernel
    assert kern.G.n <= size_bound(inst.k, inst.delta)
    ksol = brute_force_solve(kern)
    assert (ksol is not None) == yes
    if ksol is not None:
        assert verify_solution(inst, lift_kernel_solution(res, ksol))
        # some solution of the original only adds edges inside the kept vertices
        kept = set(res.kept_vertices.values())
        assert any(all(u in kept and v in kept for u, v in s.A) for s in iter_solutions(inst))
