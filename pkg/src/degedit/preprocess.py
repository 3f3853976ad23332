"""High-degree vertex deletion rule.

A vertex whose degree exceeds ``max(sigma) + k_vd + k_ed`` cannot be kept:
deletions alone could not bring its degree down far enough. Such vertices
are removed one at a time, each consuming one unit of the vertex-deletion
budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EditSet, ExtendedInstance


@dataclass(frozen=True)
class Reduced:
    instance: ExtendedInstance
    forced: tuple[int, ...]

    def lift(self, e: EditSet) -> EditSet:
        return EditSet(e.U | set(self.forced), e.D, e.A)


def apply_vertex_deletion_rule(inst: ExtendedInstance) -> Reduced | None:
    """Exhaustively apply the rule; None means the instance is a no-instance.

    The currently highest-degree qualifying vertex goes first (ties: smallest
    id), which makes the forced-deletion list reproducible.
    """
    g, kvd = inst.G, inst.k_vd
    delta = inst.delta
    forced: list[int] = []
    while True:
        limit = delta + kvd + inst.k_ed
        degs = g.degrees()
        over = [v for v, d in degs.items() if d > limit]
        if not over:
            break
        v = min(over, key=lambda x: (-degs[x], x))
        kvd -= 1
        if kvd < 0:
            return None
        forced.append(v)
        g = g.remove_vertices([v])
    reduced = ExtendedInstance(g, inst.sigma, kvd, inst.k_ed, inst.k_ea)
    return Reduced(reduced, tuple(forced))
