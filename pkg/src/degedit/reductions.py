"""Hardness constructions as instance generators.

Each generator turns a clique or independent-set question on regular graphs
into an editing instance; the cross-compositions do the same for many
graphs at once (the edited instance is a yes-instance iff at least one input
graph has the clique).
"""

from __future__ import annotations

from .graph import DegreeSequence, Graph, Instance


class ReductionError(ValueError):
    pass


def regular_degree(g: Graph) -> int:
    degs = set(g.degrees().values())
    if len(degs) > 1:
        raise ReductionError("input graph is not regular")
    return degs.pop() if degs else 0


def disjoint_union(graphs: list[Graph]) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Union on fresh ids 1..N; provenance maps new id -> (copy index, original id)."""
    vertices, edges, prov = [], [], {}
    offset = 0
    for i, g in enumerate(graphs):
        ids = {v: offset + j + 1 for j, v in enumerate(g.vertices)}
        for v, nv in ids.items():
            prov[nv] = (i, v)
        vertices += ids.values()
        edges += [(ids[u], ids[v]) for u, v in g.edges]
        offset += g.n
    return Graph(vertices, edges), prov


def subdivide(g: Graph) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Replace every edge by a path of length two.

    Subdivision vertices get ids after max(V(G)), in sorted edge order; the
    returned map sends each of them to the edge it replaced.
    """
    start = max(g.vertices, default=0)
    prov = {}
    edges = []
    for j, (u, v) in enumerate(g.edges):
        w = start + j + 1
        prov[w] = (u, v)
        edges += [(u, w), (w, v)]
    return Graph(list(g.vertices) + list(prov), edges), prov


def _budget(k: int) -> int:
    return k * (k - 1) // 2


def _clique_sigma(n: int, d: int, k: int) -> list[int]:
    return [d] * (n - k) + [d - (k - 1)] * k


def reduce_clique_edge_deletion(g: Graph, k: int) -> Instance:
    """k-clique in a d-regular graph  <->  edge deletions to the lowered sequence."""
    d = regular_degree(g)
    if k < 0 or d < k - 1 or k > g.n:
        raise ReductionError(f"need 0 <= k <= n and d >= k-1 (d={d}, k={k}, n={g.n})")
    return Instance(g, DegreeSequence(_clique_sigma(g.n, d, k)), frozenset({"ed"}), _budget(k))


def reduce_independent_set_edge_addition(g: Graph, k: int) -> Instance:
    d = regular_degree(g)
    if k < 0 or k > g.n:
        raise ReductionError(f"need 0 <= k <= n (k={k}, n={g.n})")
    sigma = [d + (k - 1)] * k + [d] * (g.n - k)
    return Instance(g, DegreeSequence(sigma), frozenset({"ea"}), _budget(k))


def reduce_clique_vertex_deletion(g: Graph, k: int) -> Instance:
    d = regular_degree(g)
    if k < 0 or k > g.n or d - (k - 1) < 3:
        raise ReductionError(f"need d-(k-1) >= 3 (d={d}, k={k})")
    sub, _ = subdivide(g)
    kk = _budget(k)
    p = g.n + g.m - kk
    sigma = _clique_sigma(g.n, d, k) + [2] * (p - g.n)
    return Instance(sub, DegreeSequence(sigma), frozenset({"vd"}), kk)


def _check_equivalent(graphs: list[tuple[Graph, int]], same_m: bool) -> tuple[int, int, int, int]:
    if not graphs:
        raise ReductionError("need at least one instance")
    ks = {k for _, k in graphs}
    ns = {g.n for g, _ in graphs}
    ms = {g.m for g, _ in graphs}
    ds = {regular_degree(g) for g, _ in graphs}
    if len(ks) > 1 or len(ns) > 1 or len(ds) > 1 or (same_m and len(ms) > 1):
        raise ReductionError("inputs are not equivalent: need equal k, n, degree" + (" and m" if same_m else ""))
    return ks.pop(), ns.pop(), ds.pop(), ms.pop()


def cross_compose_edge_deletion(instances: list[tuple[Graph, int]]) -> Instance:
    k, n, d, _ = _check_equivalent(instances, same_m=False)
    if d < k - 1 or k > n:
        raise ReductionError(f"need d >= k-1 (d={d}, k={k})")
    union, _ = disjoint_union([g for g, _ in instances])
    t = len(instances)
    return Instance(union, DegreeSequence(_clique_sigma(n * t, d, k)), frozenset({"ed"}), _budget(k))


def cross_compose_vertex_deletion(instances: list[tuple[Graph, int]]) -> Instance:
    k, n, d, m = _check_equivalent(instances, same_m=True)
    if d - (k - 1) < 3 or k > n:
        raise ReductionError(f"need d-(k-1) >= 3 (d={d}, k={k})")
    union, _ = disjoint_union([g for g, _ in instances])
    sub, _ = subdivide(union)
    t = len(instances)
    kk = _budget(k)
    p = (n + m) * t - kk
    sigma = _clique_sigma(n * t, d, k) + [2] * (p - n * t)
    return Instance(sub, DegreeSequence(sigma), frozenset({"vd"}), kk)


def provenance_lines(graphs: list[Graph], subdivided: bool) -> list[str]:
    """Sidecar text: which input vertex or edge each generated vertex stands for."""
    union, copies = disjoint_union(graphs)
    lines = [f"v {nv} {i + 1} {v}" for nv, (i, v) in sorted(copies.items())]
    if subdivided:
        _, subs = subdivide(union)
        lines += [f"s {w} {u} {v}" for w, (u, v) in sorted(subs.items())]
    return lines
