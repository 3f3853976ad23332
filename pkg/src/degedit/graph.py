"""Graphs, degree sequences, edit sets and solution checking.

Every other module builds on the value types defined here. Graphs are
immutable: editing operations return new graphs and vertex ids are never
renumbered, so a solution found on a reduced graph can be reported against
the original input.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

Edge = tuple[int, int]

OPS = ("vd", "ed", "ea")


class GraphError(ValueError):
    pass


class EditError(ValueError):
    """An edit set that does not fit the graph it is applied to."""

    reason = "invalid-edit"


class UnknownVertexError(EditError):
    reason = "unknown-vertex"


class MissingEdgeError(EditError):
    reason = "deleted-edge-missing"


class ExistingEdgeError(EditError):
    reason = "added-edge-exists"


class DeletedEndpointError(EditError):
    reason = "added-edge-on-deleted-vertex"


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph over integer vertex ids."""

    __slots__ = ("_adj", "_edges")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        seen = set()
        for u, v in edges:
            e = edge(int(u), int(v))
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            if e[0] not in adj or e[1] not in adj:
                raise GraphError(f"edge {e} has an endpoint outside the vertex set")
            seen.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._edges = tuple(sorted(seen))

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        g._edges = tuple(sorted((u, w) for u, nb in g._adj.items() for w in nb if u < w))
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, i + 1) for i in range(1, n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(range(1, n + 1))

    @classmethod
    def from_networkx(cls, nxg) -> "Graph":
        """Relabel an arbitrary networkx graph onto ids 1..n (sorted node order)."""
        nodes = sorted(nxg.nodes)
        ids = {v: i + 1 for i, v in enumerate(nodes)}
        return cls(ids.values(), [(ids[u], ids[v]) for u, v in nxg.edges])

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self._adj)
        g.add_edges_from(self._edges)
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> dict[int, int]:
        return {v: len(nb) for v, nb in self._adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def non_edges(self) -> Iterator[Edge]:
        vs = self.vertices
        for i, u in enumerate(vs):
            nb = self._adj[u]
            for w in vs[i + 1:]:
                if w not in nb:
                    yield (u, w)

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence(len(nb) for nb in self._adj.values())

    def remove_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        return Graph._from_adj({v: nb - drop for v, nb in self._adj.items() if v not in drop})

    def remove_edges(self, es: Iterable[Edge]) -> "Graph":
        adj = {v: set(nb) for v, nb in self._adj.items()}
        for u, v in es:
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph._from_adj({v: frozenset(nb) for v, nb in adj.items()})

    def add_edges(self, es: Iterable[Edge]) -> "Graph":
        adj = {v: set(nb) for v, nb in self._adj.items()}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        return Graph._from_adj({v: frozenset(nb) for v, nb in adj.items()})

    def add_vertices(self, vs: Iterable[int]) -> "Graph":
        adj = dict(self._adj)
        for v in vs:
            adj.setdefault(v, frozenset())
        return Graph._from_adj(adj)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph((mapping[v] for v in self._adj), ((mapping[u], mapping[v]) for u, v in self._edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((tuple(self._adj), self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={list(self._edges)})"


class DegreeSequence(tuple):
    """Multiset of vertex degrees, stored sorted in nonincreasing order.

    Two sequences compare equal iff they are equal as multisets.
    """

    def __new__(cls, values: Iterable[int] = ()):
        vals = sorted((int(x) for x in values), reverse=True)
        if vals and vals[-1] < 0:
            raise ValueError(f"negative degree {vals[-1]} in sequence")
        return super().__new__(cls, vals)

    @property
    def max(self) -> int:
        return self[0] if self else 0

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)})"


def degree_vector(g: Graph) -> tuple[int, ...]:
    """Counts of vertices per degree, from degree 0 to the maximum degree of `g`."""
    return degree_vector_of_sequence(g.degree_sequence())


def degree_vector_of_sequence(sigma: Iterable[int]) -> tuple[int, ...]:
    counts = Counter(sigma)
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def trim(vec: Sequence[int]) -> tuple[int, ...]:
    end = len(vec)
    while end and vec[end - 1] == 0:
        end -= 1
    return tuple(vec[:end])


def vectors_equal_padded(a: Sequence[int], b: Sequence[int]) -> bool:
    return trim(a) == trim(b)


@dataclass(frozen=True)
class EditSet:
    """Solution triple: deleted vertices U, deleted edges D, added edges A."""

    U: frozenset[int] = field(default_factory=frozenset)
    D: frozenset[Edge] = field(default_factory=frozenset)
    A: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "U", frozenset(int(v) for v in self.U))
        object.__setattr__(self, "D", frozenset(edge(*e) for e in self.D))
        object.__setattr__(self, "A", frozenset(edge(*e) for e in self.A))

    @property
    def size(self) -> int:
        return len(self.U) + len(self.D) + len(self.A)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.U), len(self.D), len(self.A)

    def sort_key(self):
        """Order used by the brute-force oracle: size, then U, then D, then A."""
        U, D, A = sorted(self.U), sorted(self.D), sorted(self.A)
        return (self.size, len(U), U, len(D), D, A)

    def union(self, other: "EditSet") -> "EditSet":
        return EditSet(self.U | other.U, self.D | other.D, self.A | other.A)

    def relabel(self, mapping: Mapping[int, int]) -> "EditSet":
        return EditSet(
            {mapping[v] for v in self.U},
            {(mapping[u], mapping[v]) for u, v in self.D},
            {(mapping[u], mapping[v]) for u, v in self.A},
        )

    def __repr__(self) -> str:
        return f"EditSet(U={sorted(self.U)}, D={sorted(self.D)}, A={sorted(self.A)})"


@dataclass(frozen=True)
class Instance:
    """Graph, target degree sequence, allowed operations and a combined budget."""

    G: Graph
    sigma: DegreeSequence
    ops: frozenset[str]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", DegreeSequence(self.sigma))
        ops = frozenset(self.ops)
        if not ops or not ops <= set(OPS):
            raise ValueError(f"operation set must be a nonempty subset of {OPS}, got {sorted(ops)}")
        object.__setattr__(self, "ops", ops)
        if self.k < 0:
            raise ValueError("budget k must be nonnegative")

    @property
    def delta(self) -> int:
        return self.sigma.max

    def splits(self) -> Iterator["ExtendedInstance"]:
        """Per-operation budgets summing to k, zero outside the allowed ops."""
        allowed = [op in self.ops for op in OPS]
        for kvd in range(self.k + 1 if allowed[0] else 1):
            for ked in range(self.k - kvd + 1 if allowed[1] else 1):
                kea = self.k - kvd - ked
                if kea and not allowed[2]:
                    continue
                if kvd + ked + kea != self.k:
                    continue
                yield ExtendedInstance(self.G, self.sigma, kvd, ked, kea)


@dataclass(frozen=True)
class ExtendedInstance:
    """Graph and target sequence with separate budgets for each operation."""

    G: Graph
    sigma: DegreeSequence
    k_vd: int
    k_ed: int
    k_ea: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", DegreeSequence(self.sigma))
        if min(self.k_vd, self.k_ed, self.k_ea) < 0:
            raise ValueError("budgets must be nonnegative")

    @property
    def k(self) -> int:
        return self.k_vd + self.k_ed + self.k_ea

    @property
    def delta(self) -> int:
        return self.sigma.max

    @property
    def budgets(self) -> tuple[int, int, int]:
        return self.k_vd, self.k_ed, self.k_ea

    def splits(self) -> Iterator["ExtendedInstance"]:
        yield self


AnyInstance = Union[Instance, ExtendedInstance]


def check_edits(g: Graph, e: EditSet) -> None:
    """Raise the matching EditError if `e` is not a well-formed edit of `g`."""
    for v in e.U:
        if v not in g:
            raise UnknownVertexError(f"deleted vertex {v} not in graph")
    for u, v in e.D:
        if u in e.U or v in e.U or not g.has_edge(u, v):
            raise MissingEdgeError(f"deleted edge {(u, v)} is not an edge of G-U")
    for u, v in e.A:
        if u not in g or v not in g:
            raise UnknownVertexError(f"added edge {(u, v)} has an unknown endpoint")
        if u in e.U or v in e.U:
            raise DeletedEndpointError(f"added edge {(u, v)} touches a deleted vertex")
        if g.has_edge(u, v):
            raise ExistingEdgeError(f"added edge {(u, v)} is already an edge")


def apply_edits(g: Graph, e: EditSet) -> Graph:
    """Return G - U - D + A."""
    check_edits(g, e)
    return g.remove_vertices(e.U).remove_edges(e.D).add_edges(e.A)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def check_solution(inst: AnyInstance, e: EditSet) -> Verdict:
    """Verify `e` against `inst`; the verdict carries a machine-readable reason."""
    try:
        g2 = apply_edits(inst.G, e)
    except EditError as exc:
        return Verdict(False, exc.reason)
    nu, nd, na = e.counts
    if isinstance(inst, Instance):
        for op, cnt in zip(OPS, (nu, nd, na)):
            if cnt and op not in inst.ops:
                return Verdict(False, "operation-not-allowed")
        if e.size > inst.k:
            return Verdict(False, "budget-exceeded")
    else:
        if nu > inst.k_vd or nd > inst.k_ed or na > inst.k_ea:
            return Verdict(False, "budget-exceeded")
    if g2.degree_sequence() != inst.sigma:
        return Verdict(False, "degree-sequence-mismatch")
    return Verdict(True)


def verify_solution(inst: AnyInstance, e: EditSet) -> bool:
    return check_solution(inst, e).ok
