"""Random separation: colorings, the separation graph and the colorful DP.

A coloring paints vertices red/yellow/blue and edges red/blue. Red vertices
are deletion candidates, red edges are edge-deletion candidates and yellow
vertices may receive new edges. The edges that "matter" for a colorful
solution form L; the components of the graph they span are selected or
skipped as a whole by a dynamic program over (budget usage, yellow degree
multiset, degree vector) keys.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Edge, EditSet, ExtendedInstance, Graph, degree_vector, degree_vector_of_sequence, edge, trim

RED, YELLOW, BLUE = "red", "yellow", "blue"


@dataclass(frozen=True)
class Coloring:
    """Vertex and edge coloring; anything not listed as red or yellow is blue."""

    red_vertices: frozenset[int] = frozenset()
    yellow_vertices: frozenset[int] = frozenset()
    red_edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.red_vertices & self.yellow_vertices:
            raise ValueError("a vertex cannot be both red and yellow")

    def vertex_color(self, v: int) -> str:
        if v in self.red_vertices:
            return RED
        return YELLOW if v in self.yellow_vertices else BLUE

    def edge_color(self, e: Edge) -> str:
        return RED if edge(*e) in self.red_edges else BLUE

    def vertex_map(self, g: Graph) -> dict[int, str]:
        return {v: self.vertex_color(v) for v in g.vertices}

    def edge_map(self, g: Graph) -> dict[Edge, str]:
        return {e: self.edge_color(e) for e in g.edges}

    def restrict(self, g: Graph) -> "Coloring":
        vs = set(g.vertices)
        es = {e for e in self.red_edges if g.has_edge(*e)}
        return Coloring(self.red_vertices & vs, self.yellow_vertices & vs, frozenset(es))

    @classmethod
    def from_maps(cls, vertex_color: dict[int, str], edge_color: dict[Edge, str]) -> "Coloring":
        return cls(
            frozenset(v for v, c in vertex_color.items() if c == RED),
            frozenset(v for v, c in vertex_color.items() if c == YELLOW),
            frozenset(edge(*e) for e, c in edge_color.items() if c == RED),
        )


def random_coloring(g: Graph, rng_seed: int | str | random.Random | None = None) -> Coloring:
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    red, yellow = set(), set()
    for v in g.vertices:
        c = rng.randrange(3)
        if c == 0:
            red.add(v)
        elif c == 1:
            yellow.add(v)
    red_edges = frozenset(e for e in g.edges if rng.randrange(2) == 0)
    return Coloring(frozenset(red), frozenset(yellow), red_edges)


def planted_coloring(g: Graph, e: EditSet) -> Coloring:
    """The coloring under which `e` is colorful by construction."""
    yellow = frozenset(v for a in e.A for v in a)
    return Coloring(frozenset(e.U), yellow, frozenset(e.D))


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    red_vertices: tuple[int, ...]
    yellow_vertices: tuple[int, ...]
    red_edges: tuple[Edge, ...]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class SeparationGraph:
    L: frozenset[Edge]
    components: tuple[Component, ...] = field(default_factory=tuple)


def build_separation_graph(g: Graph, c: Coloring) -> SeparationGraph:
    """Split the edges that matter under `c` into connected components.

    L holds the red edges, every edge at a red vertex and every edge joining
    two yellow vertices. Red or yellow vertices not touched by L still form
    singleton components: they can be deleted or receive new edges on their
    own.
    """
    red, yellow = c.red_vertices, c.yellow_vertices
    L = set(c.red_edges)
    for u, v in g.edges:
        if u in red or v in red or (u in yellow and v in yellow):
            L.add((u, v))
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for v in itertools.chain(red, yellow):
        parent.setdefault(v, v)
    for u, v in L:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    edges_of: dict[int, list[Edge]] = {}
    for e in L:
        edges_of.setdefault(find(e[0]), []).append(e)
    comps = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        vs = frozenset(groups[root])
        es = frozenset(edges_of.get(root, ()))
        comps.append(
            Component(
                vertices=vs,
                red_vertices=tuple(sorted(vs & red)),
                yellow_vertices=tuple(sorted(vs & yellow)),
                red_edges=tuple(sorted(e for e in es if e in c.red_edges)),
                edges=es,
            )
        )
    return SeparationGraph(frozenset(L), tuple(comps))


@dataclass
class Record:
    """Witness of a DP key: the partial solution and its selected components."""

    U: tuple[int, ...]
    D: tuple[Edge, ...]
    A: tuple[Edge, ...]
    I: tuple[int, ...]
    # current degree of every yellow vertex in the selected components
    yellow: tuple[tuple[int, int], ...]

    def edit_set(self) -> EditSet:
        return EditSet(self.U, self.D, self.A)


class _Prepared:
    """Per-component data that does not depend on the DP record."""

    __slots__ = ("comp", "delta_change", "f_degree", "pairs_inside")

    def __init__(self, g: Graph, comp: Component):
        self.comp = comp
        adj = g.adjacency
        red = set(comp.red_vertices)
        removed = set(comp.red_edges)
        for v in red:
            for w in adj[v]:
                removed.add(edge(v, w))
        fdeg = {v: len(adj[v]) for v in comp.vertices if v not in red}
        for u, v in removed:
            if u in fdeg:
                fdeg[u] -= 1
            if v in fdeg:
                fdeg[v] -= 1
        change: dict[int, int] = {}
        for v in comp.vertices:
            d = len(adj[v])
            change[d] = change.get(d, 0) - 1
            if v not in red:
                change[fdeg[v]] = change.get(fdeg[v], 0) + 1
        self.delta_change = tuple((d, c) for d, c in change.items() if c)
        self.f_degree = fdeg
        # non-adjacent pairs of G inside the yellow set; re-adding a deleted
        # edge would clash with D, so edges of G are excluded outright
        ys = comp.yellow_vertices
        self.pairs_inside = tuple((a, b) for a, b in itertools.combinations(ys, 2) if b not in adj[a])


Key = tuple


def run_dp(inst: ExtendedInstance, c: Coloring, *, stop_at_target: bool = True) -> tuple[dict[Key, Record], SeparationGraph]:
    """Build the table over all components; returns (final table, separation graph)."""
    g = inst.G
    delta = inst.delta
    r = max(delta, g.max_degree())
    sep = build_separation_graph(g, c)
    target = trim(degree_vector_of_sequence(inst.sigma))
    base = list(degree_vector(g))
    base += [0] * (r + 1 - len(base))
    kvd, ked, kea = inst.k_vd, inst.k_ed, inst.k_ea
    adj = g.adjacency

    table: dict[Key, Record] = {(0, 0, 0, (), tuple(base)): Record((), (), (), (), ())}
    if stop_at_target and trim(base) == target:
        return table, sep

    for idx, comp in enumerate(sep.components):
        nrv, nre, nyv = len(comp.red_vertices), len(comp.red_edges), len(comp.yellow_vertices)
        if nrv > kvd or nre > ked or nyv > 2 * kea:
            continue
        # deleted edges must survive the vertex deletions (D within E(G-U))
        if nrv and any(u in comp.red_vertices or v in comp.red_vertices for u, v in comp.red_edges):
            continue
        prep = _Prepared(g, comp)
        fdeg = prep.f_degree
        ys = comp.yellow_vertices
        for (tvd, ted, tea, X, vec), rec in list(table.items()):
            if tvd + nrv > kvd or ted + nre > ked or len(rec.yellow) + nyv > 2 * kea:
                continue
            vF = list(vec)
            for d, cnt in prep.delta_change:
                vF[d] += cnt
            budget = kea - tea
            cross: list[Edge] = []
            if budget and ys:
                for x, _ in rec.yellow:
                    for y in ys:
                        assert y not in adj[x], "yellow vertices of distinct components are adjacent"
                        cross.append((x, y))
            candidates = list(prep.pairs_inside) + cross
            prior = dict(rec.yellow)
            U2 = rec.U + comp.red_vertices
            D2 = rec.D + comp.red_edges
            I2 = rec.I + (idx,)
            for size in range(min(budget, len(candidates)) + 1):
                for added in itertools.combinations(candidates, size):
                    inc: dict[int, int] = {}
                    for a, b in added:
                        inc[a] = inc.get(a, 0) + 1
                        inc[b] = inc.get(b, 0) + 1
                    new_yellow = []
                    ok = True
                    for x, d in rec.yellow:
                        nd = d + inc.get(x, 0)
                        if nd > delta:
                            ok = False
                            break
                        new_yellow.append((x, nd))
                    if not ok:
                        continue
                    for y in ys:
                        nd = fdeg[y] + inc.get(y, 0)
                        if nd > delta:
                            ok = False
                            break
                        new_yellow.append((y, nd))
                    if not ok:
                        continue
                    v2 = vF
                    if inc:
                        v2 = list(vF)
                        for v, plus in inc.items():
                            old = prior[v] if v in prior else fdeg[v]
                            v2[old] -= 1
                            v2[old + plus] += 1
                    key = (tvd + nrv, ted + nre, tea + size, tuple(sorted(d for _, d in new_yellow)), tuple(v2))
                    if key in table:
                        continue
                    table[key] = Record(
                        U2, D2, rec.A + tuple(edge(a, b) for a, b in added), I2, tuple(new_yellow)
                    )
                    if stop_at_target and trim(v2) == target:
                        return table, sep
    return table, sep


def accepted_record(inst: ExtendedInstance, table: dict[Key, Record]) -> Record | None:
    target = trim(degree_vector_of_sequence(inst.sigma))
    for key, rec in table.items():
        if trim(key[4]) == target:
            return rec
    return None


def dp_solve_colored(inst: ExtendedInstance, c: Coloring) -> EditSet | None:
    """Find a solution that is colorful under `c`, if one exists."""
    table, _ = run_dp(inst, c)
    rec = accepted_record(inst, table)
    return None if rec is None else rec.edit_set()


def required_trials(k: int, delta: int) -> int:
    return 6 ** (2 * k * (delta + k) ** 2)


def required_r(k: int, delta: int) -> int:
    return 4 * k * (delta + k) ** 2

