"""Monte Carlo and derandomized drivers around the colorful DP."""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Iterator

from .graph import AnyInstance, EditSet, ExtendedInstance, Graph, verify_solution
from .preprocess import Reduced, apply_vertex_deletion_rule
from .separation import Coloring, dp_solve_colored, random_coloring, required_r, required_trials
from .universal import UniversalSet, UniversalSetError, build_universal_set

log = logging.getLogger(__name__)

DEFAULT_TRIAL_CAP = 10**5
DEFAULT_DERAND_CAP = 10**6


class DerandomizationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    solution: EditSet | None
    # False only for a "no" that rests on too few random trials
    decided: bool = True
    method: str = ""
    colorings: int = 0

    @property
    def yes(self) -> bool:
        return self.solution is not None


def _counting_feasible(inst: ExtendedInstance) -> bool:
    # every solution deletes exactly |V(G)| - |sigma| vertices, and degree sums are even
    nu = inst.G.n - len(inst.sigma)
    return 0 <= nu <= inst.k_vd and sum(inst.sigma) % 2 == 0


def _reduced_splits(inst: AnyInstance) -> list[Reduced]:
    out = []
    for split in inst.splits():
        if not _counting_feasible(split):
            continue
        red = apply_vertex_deletion_rule(split)
        if red is not None:
            out.append(red)
    return out


def _finish(inst: AnyInstance, red: Reduced, sol: EditSet) -> EditSet:
    lifted = red.lift(sol)
    if not verify_solution(inst, lifted):
        raise AssertionError(f"DP produced an invalid solution {lifted}")
    return lifted


def solve_randomized(
    inst: AnyInstance,
    trials: int | None = None,
    rng_seed: int = 0,
    trial_cap: int = DEFAULT_TRIAL_CAP,
) -> SolveResult:
    """Try independent random colorings; a "no" is one-sided.

    Trial ``t`` draws its coloring from its own stream seeded by
    ``(rng_seed, t)``, so results do not depend on evaluation order.
    """
    needed = required_trials(inst.k, inst.delta)
    if trials is None:
        trials = min(needed, trial_cap)
    reduced = _reduced_splits(inst)
    if not reduced:
        return SolveResult(None, True, "randomized", 0)
    g = inst.G
    for t in range(trials):
        coloring = random_coloring(g, f"{rng_seed}:{t}")
        for red in reduced:
            c = coloring if not red.forced else coloring.restrict(red.instance.G)
            sol = dp_solve_colored(red.instance, c)
            if sol is not None:
                return SolveResult(_finish(inst, red, sol), True, "randomized", t + 1)
    return SolveResult(None, trials >= needed, "randomized", trials)


def _sparse_plans(inst: ExtendedInstance) -> tuple[int, int, bool]:
    """(|U|, half the degree sum of sigma, feasible?)"""
    return inst.G.n - len(inst.sigma), sum(inst.sigma) // 2, _counting_feasible(inst)


def _min_yellow(na: int) -> int:
    if na == 0:
        return 0
    y = 2
    while y * (y - 1) // 2 < na:
        y += 1
    return y


def sparse_family_size(inst: ExtendedInstance) -> int:
    """Upper bound on the number of colorings `sparse_colorings` yields."""
    g = inst.G
    nu, half, ok = _sparse_plans(inst)
    if not ok:
        return 0
    total = 0
    nv = g.n - nu
    max_edges = g.m
    for nd in range(inst.k_ed + 1):
        ys = sum(math.comb(nv, y) for na in range(inst.k_ea + 1) for y in range(_min_yellow(na), min(2 * na, nv) + 1) if na or y == 0)
        total += math.comb(max_edges, nd) * ys
    return math.comb(g.n, nu) * total


def sparse_colorings(inst: ExtendedInstance) -> Iterator[Coloring]:
    """Colorings that could be the planted coloring of some solution.

    They are the members of the full cube {0,1}^m, the only (m, m)-universal
    set, whose red part is a possible (U, D) and whose yellow part is a
    possible set of addition endpoints. Every solution's planted coloring is
    among them, so running the DP on each one decides the instance exactly.
    """
    g = inst.G
    nu, half, ok = _sparse_plans(inst)
    if not ok:
        return
    for U in itertools.combinations(g.vertices, nu):
        h = g.remove_vertices(U) if U else g
        shift = half - h.m
        for nd in range(inst.k_ed + 1):
            na = nd + shift
            if na < 0 or na > inst.k_ea:
                continue
            sizes = [0] if na == 0 else range(_min_yellow(na), min(2 * na, h.n) + 1)
            for D in itertools.combinations(h.edges, nd):
                for y in sizes:
                    for Y in itertools.combinations(h.vertices, y):
                        yield Coloring(frozenset(U), frozenset(Y), frozenset(D))


def universal_colorings(g: Graph, u: UniversalSet) -> Iterator[Coloring]:
    """Distinct colorings induced by ordered pairs of `u`.

    Same family as `colorings_from_universal_set`, with repeats dropped: the
    second vector only matters on vertices the first left uncolored.
    """
    verts, edges = list(g.vertices), list(g.edges)
    nv = len(verts)
    vmask = (1 << nv) - 1
    for a in u.vectors:
        red = frozenset(v for i, v in enumerate(verts) if (a >> i) & 1)
        red_edges = frozenset(e for i, e in enumerate(edges) if (a >> (nv + i)) & 1)
        free = ~a & vmask
        seen = set()
        for b in u.vectors:
            yb = b & free
            if yb in seen:
                continue
            seen.add(yb)
            yellow = frozenset(v for i, v in enumerate(verts) if (yb >> i) & 1)
            yield Coloring(red, yellow, red_edges)


def _universal_estimate(m: int, r: int, nv: int) -> int:
    if r >= m:
        return (1 << m) * (1 << nv)
    if r <= 1:
        return 4
    size = math.ceil((1 << r) * (math.log(math.comb(m, r)) + r * math.log(2) + 1))
    return size * size


def plan_family(inst: ExtendedInstance, family: str = "auto") -> tuple[str, int, int, int]:
    """Choose the coloring family for one reduced split: (name, size, m, r)."""
    g = inst.G
    m = g.n + g.m
    r = min(required_r(inst.k, inst.delta), m)
    sparse = sparse_family_size(inst)
    universal = _universal_estimate(m, r, g.n)
    if family == "auto":
        family = "sparse" if sparse <= universal else "universal"
    size = sparse if family == "sparse" else universal
    return family, size, m, r


def derandomized_family_size(inst: AnyInstance, family: str = "auto") -> int:
    return sum(plan_family(red.instance, family)[1] for red in _reduced_splits(inst))


def solve_derandomized(
    inst: AnyInstance,
    family: str = "auto",
    cap: int = DEFAULT_DERAND_CAP,
    seed: int = 0,
) -> SolveResult:
    """Exact decision by running the DP on a covering family of colorings.

    ``family`` is ``universal`` (colorings induced by pairs from a verified
    (m, r)-universal set with r = min(4k(Δ+k)^2, m)), ``sparse`` (the
    solution-shaped part of the full cube) or ``auto`` (whichever is smaller).
    """
    tried = 0
    for red in _reduced_splits(inst):
        sub = red.instance
        name, size, m, r = plan_family(sub, family)
        if size > cap:
            raise DerandomizationTooLarge(
                f"parameters exceed derandomization cap: r={r}, m={m}, {size} colorings > {cap}"
            )
        if name == "sparse":
            stream = sparse_colorings(sub)
        else:
            try:
                u = build_universal_set(m, r, seed=seed)
            except UniversalSetError as exc:
                raise DerandomizationTooLarge(f"parameters exceed derandomization cap: r={r}, m={m} ({exc})") from exc
            stream = universal_colorings(sub.G, u)
        log.debug("split %s: %s family, ~%d colorings", sub.budgets, name, size)
        for c in stream:
            tried += 1
            sol = dp_solve_colored(sub, c)
            if sol is not None:
                return SolveResult(_finish(inst, red, sol), True, f"derandomized/{name}", tried)
    return SolveResult(None, True, "derandomized", tried)
