"""A second brute force, written without any of the package's shortcuts.

It walks every (U, D, A) within the budgets and recounts degrees with
networkx, so it shares no code path with ``degedit.oracle``.
"""

import itertools

import networkx as nx

from degedit.graph import EditSet, Instance


def _budgets(inst):
    if isinstance(inst, Instance):
        return tuple(inst.k if op in inst.ops else 0 for op in ("vd", "ed", "ea")) + (inst.k,)
    return inst.k_vd, inst.k_ed, inst.k_ea, inst.k_vd + inst.k_ed + inst.k_ea


def _subsets(items, limit):
    for r in range(min(limit, len(items)) + 1):
        yield from itertools.combinations(items, r)


def naive_solutions(inst):
    kvd, ked, kea, k = _budgets(inst)
    g = nx.Graph()
    g.add_nodes_from(inst.G.vertices)
    g.add_edges_from(inst.G.edges)
    target = sorted(inst.sigma)
    for U in _subsets(sorted(g.nodes), kvd):
        h = g.copy()
        h.remove_nodes_from(U)
        edges = sorted(tuple(sorted(e)) for e in h.edges)
        non_edges = [p for p in itertools.combinations(sorted(h.nodes), 2) if not g.has_edge(*p)]
        for D in _subsets(edges, min(ked, k - len(U))):
            for A in _subsets(non_edges, min(kea, k - len(U) - len(D))):
                h2 = h.copy()
                h2.remove_edges_from(D)
                h2.add_edges_from(A)
                if sorted(d for _, d in h2.degree) == target:
                    yield EditSet(U, D, A)


def naive_decide(inst):
    return next(naive_solutions(inst), None) is not None


def naive_count(inst):
    return sum(1 for _ in naive_solutions(inst))
