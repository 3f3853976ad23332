"""Polynomial kernel for the edge-addition-only problem.

Only edges between a bounded number of representatives per degree class are
ever needed. Everything else is removed and replaced by a small clique whose
vertices absorb the lost adjacencies; their degrees exceed max(sigma), so no
solution of the kernel can touch them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .graph import DegreeSequence, EditSet, Graph, Instance


class KernelError(ValueError):
    pass


@dataclass(frozen=True)
class KernelResult:
    kernel: Instance
    # kernel vertex id -> original vertex id, for the kept vertices only
    kept_vertices: dict[int, int]
    gadget_vertices: tuple[int, ...]
    # degree i -> kept representatives of W_i
    w_sets: dict[int, tuple[int, ...]]


class Outcome(str, Enum):
    NO = "NO"
    UNCHANGED = "UNCHANGED"


def size_bound(k: int, delta: int) -> int:
    return 2 * k * (delta + 1) ** 2 + delta + 2


def kernelize_edge_addition(inst: Instance) -> KernelResult | Outcome:
    """Return a KernelResult, ``Outcome.NO`` or ``Outcome.UNCHANGED``."""
    if inst.ops != frozenset({"ea"}):
        raise KernelError(f"kernel only applies to edge additions, got {sorted(inst.ops)}")
    g, sigma, k = inst.G, inst.sigma, inst.k
    delta = sigma.max
    if g.max_degree() > delta:
        return Outcome.NO
    threshold = 2 * k * (delta + 1)
    classes: dict[int, list[int]] = {i: [] for i in range(delta + 1)}
    for v, d in g.degrees().items():
        classes[d].append(v)
    if all(len(vs) <= threshold for vs in classes.values()):
        return Outcome.UNCHANGED

    w_sets = {i: tuple(sorted(vs)[:threshold]) for i, vs in classes.items()}
    sigma_count = Counter(sigma)
    drop = {i: len(classes[i]) - len(w_sets[i]) for i in classes}
    # additions change at most 2k degrees, so sigma keeps all but 2k of each class
    if any(sigma_count.get(i, 0) < drop[i] for i in classes):
        return Outcome.NO

    kept = [v for i in sorted(w_sets) for v in w_sets[i]]
    kept.sort()
    kept_set = set(kept)
    new_id = {v: j + 1 for j, v in enumerate(kept)}
    h = delta + 2
    gadget = tuple(range(len(kept) + 1, len(kept) + h + 1))
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in kept_set and v in kept_set]
    edges += list(itertools.combinations(gadget, 2))
    for u in kept:
        outside = sum(1 for w in g.neighbors(u) if w not in kept_set)
        edges += [(new_id[u], gadget[j]) for j in range(outside)]
    kg = Graph(list(new_id.values()) + list(gadget), edges)

    gadget_degrees = sorted((kg.degree(v) for v in gadget), reverse=True)
    rest = []
    for i, cnt in sigma_count.items():
        rest += [i] * (cnt - drop.get(i, 0))
    sigma2 = DegreeSequence(gadget_degrees + rest)
    kernel = Instance(kg, sigma2, frozenset({"ea"}), k)
    return KernelResult(kernel, {new_id[v]: v for v in kept}, gadget, w_sets)


def lift_kernel_solution(res: KernelResult | Outcome, a: EditSet) -> EditSet:
    """Map a kernel solution back onto the original vertex ids."""
    if res == Outcome.UNCHANGED:
        return a
    if not isinstance(res, KernelResult):
        raise KernelError("no kernel to lift from")
    if a.U or a.D:
        raise KernelError("kernel solutions consist of edge additions only")
    gadget = set(res.gadget_vertices)
    for u, v in a.A:
        if u in gadget or v in gadget:
            raise KernelError(f"added edge {(u, v)} touches the gadget clique")
    return EditSet(A={(res.kept_vertices[u], res.kept_vertices[v]) for u, v in a.A})
