"""Exhaustive brute-force solver, the ground truth for every other solver.

Candidates are enumerated in the order (total size, |U|, U, |D|, D, A) with
each of U, D, A listed lexicographically, so the first solution found is the
canonical smallest one. Two exact counting facts prune the search without
changing that order: every solution deletes exactly ``|V(G)| - |sigma|``
vertices, and once U is fixed the degree sum of sigma fixes ``|A| - |D|``.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator

from .graph import AnyInstance, EditSet, Graph, Instance

DEFAULT_CAP = 10**8


class OracleTooLarge(ValueError):
    pass


def _budgets(inst: AnyInstance) -> tuple[int, int, int, int]:
    if isinstance(inst, Instance):
        b = [inst.k if op in inst.ops else 0 for op in ("vd", "ed", "ea")]
        return b[0], b[1], b[2], inst.k
    return inst.k_vd, inst.k_ed, inst.k_ea, inst.k


def _size_plans(inst: AnyInstance) -> Iterator[tuple[int, int, int]]:
    """Feasible (|U|, |D|, |A|) in increasing total size."""
    g, sigma = inst.G, inst.sigma
    kvd, ked, kea, k = _budgets(inst)
    nu = g.n - len(sigma)
    if nu < 0 or nu > kvd:
        return
    for total in range(nu, k + 1):
        for nd in range(0, min(ked, total - nu) + 1):
            na = total - nu - nd
            if na <= kea:
                yield nu, nd, na


def enumeration_bound(inst: AnyInstance) -> int:
    """Upper bound on the number of candidate triples the oracle may visit."""
    g = inst.G
    non_edges = comb(g.n, 2) - g.m
    return sum(comb(g.n, nu) * comb(g.m, nd) * comb(non_edges, na) for nu, nd, na in _size_plans(inst))


def _candidates(inst: AnyInstance, cap: int) -> Iterator[EditSet]:
    bound = enumeration_bound(inst)
    if bound > cap:
        raise OracleTooLarge(f"instance too large for oracle ({bound} candidates > cap {cap})")
    g, sigma = inst.G, inst.sigma
    target = sorted(sigma)
    half_sum, odd = divmod(sum(sigma), 2)
    if odd:
        return
    plans = list(_size_plans(inst))
    totals = sorted({sum(p) for p in plans})
    verts = g.vertices
    for total in totals:
        for nu in sorted({p[0] for p in plans if sum(p) == total}):
            for U in itertools.combinations(verts, nu):
                h = g.remove_vertices(U) if U else g
                # |E(h)| - |D| + |A| must equal half the degree sum of sigma
                shift = half_sum - h.m
                for nd in range(0, total - nu + 1):
                    na = total - nu - nd
                    if (nu, nd, na) not in plans or na - nd != shift:
                        continue
                    non_edges = list(h.non_edges()) if na else []
                    base = h.degrees()
                    for D in itertools.combinations(h.edges, nd):
                        deg = dict(base)
                        for u, v in D:
                            deg[u] -= 1
                            deg[v] -= 1
                        for A in itertools.combinations(non_edges, na):
                            d2 = dict(deg)
                            for u, v in A:
                                d2[u] += 1
                                d2[v] += 1
                            if sorted(d2.values()) == target:
                                yield EditSet(U, D, A)


def brute_force_solve(inst: AnyInstance, cap: int = DEFAULT_CAP) -> EditSet | None:
    """Canonical smallest solution of `inst`, or None for a no-instance."""
    return next(_candidates(inst, cap), None)


def iter_solutions(inst: AnyInstance, cap: int = DEFAULT_CAP) -> Iterator[EditSet]:
    return _candidates(inst, cap)


def count_solutions(inst: AnyInstance, cap: int, enum_cap: int = DEFAULT_CAP) -> int:
    """Number of distinct solutions, saturating at `cap`."""
    count = 0
    for _ in _candidates(inst, enum_cap):
        count += 1
        if count >= cap:
            break
    return count


def decide(inst: AnyInstance, cap: int = DEFAULT_CAP) -> bool:
    return brute_force_solve(inst, cap) is not None


def has_clique(g: Graph, k: int) -> bool:
    """Brute-force k-clique test used to cross-check the reductions."""
    adj = g.adjacency
    return any(
        all(v in adj[u] for u, v in itertools.combinations(c, 2))
        for c in itertools.combinations(g.vertices, k)
    )


def has_independent_set(g: Graph, k: int) -> bool:
    adj = g.adjacency
    return any(
        not any(v in adj[u] for u, v in itertools.combinations(c, 2))
        for c in itertools.combinations(g.vertices, k)
    )
