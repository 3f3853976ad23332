"""Wall time of the derandomized solver as the cross-composition family doubles in size."""

import argparse
from pathlib import Path

from degedit.bench import FAMILIES, BenchConfig, run_bench, table_lines, tsv_lines


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=tuple(FAMILIES), default="compose-ed")
    ap.add_argument("--t", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32])
    ap.add_argument("-k", type=int, default=2)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--tsv", type=Path, default=None)
    args = ap.parse_args()

    cfg = BenchConfig(args.family, tuple(args.t), args.k, args.degree, tuple(args.seeds), args.repeat)
    rows = run_bench(cfg)
    print("\n".join(table_lines(rows)))
    if args.tsv:
        args.tsv.write_text("\n".join(tsv_lines(rows)) + "\n")
        print(f"rows written to {args.tsv}")


if __name__ == "__main__":
    main()
