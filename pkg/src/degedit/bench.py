"""Wall-time measurements over seeded cross-composition families."""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import dataclass, field

from .corpus import regular_graphs
from .graph import Graph, Instance
from .io import format_instance
from .reductions import cross_compose_edge_deletion, cross_compose_vertex_deletion
from .solvers import solve_derandomized

FAMILIES = {
    "compose-ed": cross_compose_edge_deletion,
    "compose-vd": cross_compose_vertex_deletion,
}


@dataclass
class BenchConfig:
    family: str = "compose-ed"
    ts: tuple[int, ...] = (1, 2, 4, 8)
    k: int = 2
    degree: int = 3
    seeds: tuple[int, ...] = (0, 1, 2)
    repeat: int = 5


@dataclass
class BenchRow:
    family: str
    t: int
    n: int
    m: int
    k: int
    delta: int
    seed: int
    instance_hash: str
    seconds: float
    yes: bool


@dataclass
class BenchSummary:
    t: int
    n: int
    median_seconds: float
    # median time divided by the previous row's median (None for the first row)
    ratio: float | None
    rows: list[BenchRow] = field(default_factory=list)


def instance_hash(inst: Instance) -> str:
    return hashlib.sha256(format_instance(inst).encode()).hexdigest()[:16]


def _base_pool(degree: int) -> list[Graph]:
    pool = [g for g, d in regular_graphs(7) if d == degree]
    if not pool:
        raise ValueError(f"no connected {degree}-regular graph with at most 7 vertices")
    # largest order with a choice of graphs keeps the union non-trivial
    n = max(g.n for g in pool)
    return [g for g in pool if g.n == n]


def _shuffled(g: Graph, rng: random.Random) -> Graph:
    ids = list(g.vertices)
    perm = ids[:]
    rng.shuffle(perm)
    return g.relabel(dict(zip(ids, perm)))


def make_instance(family: str, t: int, k: int, degree: int, seed: int) -> Instance:
    rng = random.Random(f"{family}:{t}:{k}:{degree}:{seed}")
    pool = _base_pool(degree)
    graphs = [_shuffled(rng.choice(pool), rng) for _ in range(t)]
    inst = FAMILIES[family]([(g, k) for g in graphs])
    return Instance(_shuffled(inst.G, rng), inst.sigma, inst.ops, inst.k)


def _time_solve(inst: Instance, repeat: int) -> tuple[float, bool]:
    best = float("inf")
    yes = False
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        res = solve_derandomized(inst)
        best = min(best, time.perf_counter() - t0)
        yes = res.yes
    return best, yes


def run_bench(cfg: BenchConfig) -> list[BenchSummary]:
    out: list[BenchSummary] = []
    prev = None
    for t in cfg.ts:
        rows = []
        for seed in cfg.seeds:
            inst = make_instance(cfg.family, t, cfg.k, cfg.degree, seed)
            secs, yes = _time_solve(inst, cfg.repeat)
            rows.append(BenchRow(cfg.family, t, inst.G.n, inst.G.m, inst.k, inst.delta, seed,
                                 instance_hash(inst), secs, yes))
        med = statistics.median(r.seconds for r in rows)
        out.append(BenchSummary(t, rows[0].n, med, None if prev is None else med / prev, rows))
        prev = med
    return out


TSV_HEADER = ("family", "t", "n", "m", "k", "delta", "seed", "hash", "seconds", "yes")


def tsv_lines(summaries: list[BenchSummary]) -> list[str]:
    lines = ["\t".join(TSV_HEADER)]
    for s in summaries:
        for r in s.rows:
            lines.append("\t".join(str(x) for x in (r.family, r.t, r.n, r.m, r.k, r.delta, r.seed,
                                                    r.instance_hash, f"{r.seconds:.6f}", int(r.yes))))
    return lines


def table_lines(summaries: list[BenchSummary]) -> list[str]:
    lines = [f"{'t':>4} {'n':>6} {'median s':>12} {'ratio':>7}"]
    for s in summaries:
        ratio = "-" if s.ratio is None else f"{s.ratio:.2f}"
        lines.append(f"{s.t:>4} {s.n:>6} {s.median_seconds:>12.6f} {ratio:>7}")
    return lines
