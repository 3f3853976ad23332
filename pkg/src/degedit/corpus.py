"""Seeded instance families shared by the test suite and the scripts."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

import networkx as nx

from .graph import OPS, DegreeSequence, EditSet, ExtendedInstance, Graph, Instance, apply_edits

ALL_OP_SETS = tuple(frozenset(c) for r in (1, 2, 3) for c in itertools.combinations(OPS, r))


@lru_cache(maxsize=None)
def small_graphs(max_n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class with at most `max_n` vertices (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    return tuple(Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= max_n)


@lru_cache(maxsize=None)
def regular_graphs(max_n: int, connected: bool = True) -> tuple[tuple[Graph, int], ...]:
    """(graph, degree) for every d-regular graph on 1..max_n vertices, up to isomorphism."""
    out = []
    for g in small_graphs(max_n):
        if g.n == 0:
            continue
        degs = set(g.degrees().values())
        if len(degs) != 1:
            continue
        if connected and not nx.is_connected(g.to_networkx()):
            continue
        out.append((g, degs.pop()))
    return tuple(out)


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph(range(1, n + 1), [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])


def random_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n)) for _ in range(count)]


def random_edit(g: Graph, rng: random.Random, kvd: int, ked: int, kea: int) -> EditSet:
    """A random valid edit with at most the given number of each operation."""
    U = set(rng.sample(g.vertices, min(kvd, g.n)))
    h = g.remove_vertices(U)
    D = rng.sample(h.edges, min(ked, h.m))
    non_edges = list(h.non_edges())
    A = rng.sample(non_edges, min(kea, len(non_edges)))
    return EditSet(U, D, A)


def sigma_variants(g: Graph, rng: random.Random, count: int = 3, max_degree: int = 4) -> list[DegreeSequence]:
    """The graph's own sequence, sequences reachable by small random edits, and a perturbed one."""
    seen = []

    def push(s):
        s = DegreeSequence(s)
        if s.max <= max_degree and s not in seen:
            seen.append(s)

    push(g.degree_sequence())
    for _ in range(4 * count):
        if len(seen) >= count:
            break
        split = rng.choice([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 1, 0), (0, 2, 0), (0, 0, 2)])
        push(apply_edits(g, random_edit(g, rng, *split)).degree_sequence())
    base = list(g.degree_sequence())
    if base:
        i = rng.randrange(len(base))
        base[i] = max(0, base[i] + rng.choice((-1, 1)))
        push(base)
    return seen


def oracle_corpus(max_n: int = 5, random_count: int = 200, random_max_n: int = 7, seed: int = 2024,
                  sigmas_per_graph: int = 3, max_k: int = 2) -> Iterator[Instance]:
    """Instances over small graphs, varied sigma, every operation set and k <= max_k."""
    rng = random.Random(seed)
    graphs = list(small_graphs(max_n)) + random_graphs(random_count, random_max_n, seed + 1)
    for g in graphs:
        for sigma in sigma_variants(g, rng, sigmas_per_graph):
            for ops in ALL_OP_SETS:
                for k in range(max_k + 1):
                    yield Instance(g, sigma, ops, k)


def bounded_degree_graph(rng: random.Random, n: int, max_degree: int, density: float) -> Graph:
    """Random graph whose degrees never exceed `max_degree`."""
    deg = [0] * (n + 1)
    edges = []
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    target = int(density * n * max_degree / 2)
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(range(1, n + 1), edges)


def planted_instance(rng: random.Random, max_n: int = 30, max_k: int = 4, max_delta: int = 6,
                     density: float | None = None) -> tuple[ExtendedInstance, EditSet]:
    """Build an instance backwards from a target graph and a hidden edit set.

    Returns the instance (budgets equal to the hidden edit counts) and the
    hidden solution.
    """
    while True:
        delta = rng.randint(1, max_delta)
        k = rng.randint(0, max_k)
        n = rng.randint(max(4, k + 2), max_n)
        kvd = rng.randint(0, k)
        ked = rng.randint(0, k - kvd)
        kea = k - kvd - ked
        target = bounded_degree_graph(rng, n, delta, rng.uniform(0.3, 0.9) if density is None else density)
        # vertices to be deleted come back with fresh ids
        new_ids = list(range(n + 1, n + kvd + 1))
        g = target.add_vertices(new_ids)
        extra = []
        for w in new_ids:
            others = [v for v in g.vertices if v != w]
            extra += [(w, x) for x in rng.sample(others, rng.randint(0, min(len(others), delta + k)))]
        g = g.add_edges({tuple(sorted(e)) for e in extra})
        # deleted edges must be absent from the target, added edges present in it
        non_edges = list(target.non_edges())
        if len(non_edges) < ked or target.m < kea:
            continue
        D = rng.sample(non_edges, ked)
        A = rng.sample(target.edges, kea)
        g = g.add_edges(D).remove_edges(A)
        sol = EditSet(new_ids, D, A)
        sigma = target.degree_sequence()
        inst = ExtendedInstance(g, sigma, kvd, ked, kea)
        return inst, sol
