"""Command-line front end."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import FAMILIES, BenchConfig, run_bench, table_lines, tsv_lines
from .graph import Graph, check_solution
from .io import ParseError, format_instance, format_solution, parse_graph_lines, parse_instance, parse_solution
from .kernel import KernelError, Outcome, kernelize_edge_addition
from .oracle import OracleTooLarge, brute_force_solve, enumeration_bound
from .reductions import (
    ReductionError,
    provenance_lines,
    reduce_clique_edge_deletion,
    reduce_clique_vertex_deletion,
    reduce_independent_set_edge_addition,
)
from .solvers import DEFAULT_DERAND_CAP, DerandomizationTooLarge, derandomized_family_size, solve_derandomized, solve_randomized

DEFAULT_SEED = 20240101
AUTO_BRUTE_CAP = 10**5

EXIT_OK, EXIT_ERROR, EXIT_PROBABLY_NO = 0, 1, 2


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def choose_mode(inst) -> str:
    if enumeration_bound(inst) <= AUTO_BRUTE_CAP:
        return "brute"
    if derandomized_family_size(inst) <= DEFAULT_DERAND_CAP:
        return "derand"
    return "random"


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    mode = choose_mode(inst) if args.mode == "auto" else args.mode
    decided = True
    if mode == "brute":
        sol = brute_force_solve(inst)
    elif mode == "derand":
        res = solve_derandomized(inst, family=args.family, seed=args.seed)
        sol = res.solution
    else:
        res = solve_randomized(inst, trials=args.trials, rng_seed=args.seed)
        sol, decided = res.solution, res.decided
    print(f"# mode {mode}", file=sys.stderr)
    _emit(format_solution(sol), args.output)
    if sol is None and not decided:
        print("# NO is probabilistic: fewer trials than the guarantee requires", file=sys.stderr)
        return EXIT_PROBABLY_NO
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    sol = parse_solution(_read(args.solution))
    if sol is None:
        print("NO (nothing to verify)")
        return EXIT_OK
    verdict = check_solution(inst, sol)
    if verdict.ok:
        print("VALID")
        return EXIT_OK
    print(f"INVALID: {verdict.reason.replace('-', ' ')}")
    return EXIT_ERROR


def cmd_kernel(args) -> int:
    inst = parse_instance(_read(args.instance))
    res = kernelize_edge_addition(inst)
    if res == Outcome.NO:
        _emit("NO\n", args.output)
    elif res == Outcome.UNCHANGED:
        print("# unchanged: instance is already within the kernel bound", file=sys.stderr)
        _emit(format_instance(inst), args.output)
    else:
        _emit(format_instance(res.kernel), args.output)
    return EXIT_OK


def load_graph(source: str) -> Graph:
    """``K<n>``, ``C<n>``, ``P<n>``, ``E<n>`` (edgeless) or a file with p/e lines."""
    makers = {"K": Graph.complete, "C": Graph.cycle, "P": Graph.path, "E": Graph.empty}
    if len(source) > 1 and source[0] in makers and source[1:].isdigit():
        return makers[source[0]](int(source[1:]))
    return parse_graph_lines(_read(source))[0]


def cmd_generate(args) -> int:
    graphs = [load_graph(s) for s in args.graph]
    single = {
        "clique-ed": reduce_clique_edge_deletion,
        "is-ea": reduce_independent_set_edge_addition,
        "clique-vd": reduce_clique_vertex_deletion,
    }
    if args.kind in single:
        if len(graphs) != 1:
            raise ReductionError(f"{args.kind} takes exactly one graph")
        inst = single[args.kind](graphs[0], args.k)
    else:
        inst = FAMILIES[args.kind]([(g, args.k) for g in graphs])
    _emit(format_instance(inst), args.output)
    if args.provenance:
        subdivided = args.kind in ("clique-vd", "compose-vd")
        Path(args.provenance).write_text("\n".join(provenance_lines(graphs, subdivided)) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = BenchConfig(family=args.family, ts=tuple(args.t), k=args.k, degree=args.degree,
                      seeds=tuple(args.seed + i for i in range(args.seeds)), repeat=args.repeat)
    summaries = run_bench(cfg)
    print("\n".join(table_lines(summaries)))
    tsv = "\n".join(tsv_lines(summaries)) + "\n"
    if args.tsv:
        Path(args.tsv).write_text(tsv, encoding="utf-8")
    else:
        print()
        sys.stdout.write(tsv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degedit", description="Edit a graph to a target degree sequence.")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for all randomness (default {DEFAULT_SEED})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance and print a solution")
    s.add_argument("instance", help="instance file, or - for stdin")
    s.add_argument("--mode", choices=("auto", "brute", "random", "derand"), default="auto")
    s.add_argument("--trials", type=int, default=None, help="random mode: number of colorings")
    s.add_argument("--family", choices=("auto", "sparse", "universal"), default="auto")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against an instance")
    v.add_argument("instance")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("kernel", help="kernelize an edge-addition instance")
    k.add_argument("instance")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_kernel)

    g = sub.add_parser("generate", help="emit an instance from a hardness construction")
    g.add_argument("kind", choices=("clique-ed", "is-ea", "clique-vd", *FAMILIES))
    g.add_argument("graph", nargs="+", help="K5, C4, P3, E6 or a graph file")
    g.add_argument("-k", type=int, required=True)
    g.add_argument("-o", "--output")
    g.add_argument("--provenance", help="write the vertex provenance sidecar here")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="time the derandomized solver on composition families")
    b.add_argument("--family", choices=tuple(FAMILIES), default="compose-ed")
    b.add_argument("--t", type=int, nargs="+", default=[1, 2, 4, 8])
    b.add_argument("-k", type=int, default=2)
    b.add_argument("--degree", type=int, default=3)
    b.add_argument("--seeds", type=int, default=3, help="number of seeds, starting at --seed")
    b.add_argument("--repeat", type=int, default=5)
    b.add_argument("--tsv", help="write the tab-separated rows here instead of stdout")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    print(f"# seed {args.seed}", file=sys.stderr)
    try:
        return args.func(args)
    except (OSError, ParseError, ReductionError, KernelError, OracleTooLarge, DerandomizationTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
