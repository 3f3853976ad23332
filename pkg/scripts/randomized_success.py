"""Success rate of random colorings on planted instances, broken down by (k, max degree).

With uniform colorings a fixed solution is colorful with probability roughly
3^-(|U| + |endpoints of A| + |blue neighbourhood|) * 2^-(|D| + |blue edges|),
so the rate drops quickly as k and the target degree grow.
"""

import argparse
import random
import time
from collections import Counter

from degedit.corpus import planted_instance
from degedit.solvers import solve_randomized


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--trials", type=int, default=10**4)
    ap.add_argument("--corpus-seed", type=int, default=7)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.corpus_seed)
    corpus = [planted_instance(rng)[0] for _ in range(args.count)]
    hits, totals, used = Counter(), Counter(), Counter()
    t0 = time.perf_counter()
    for inst in corpus:
        res = solve_randomized(inst, trials=args.trials, rng_seed=args.seed)
        key = (inst.k, inst.delta)
        totals[key] += 1
        if res.yes:
            hits[key] += 1
            used[key] += res.colorings
    elapsed = time.perf_counter() - t0
    found = sum(hits.values())
    print(f"success {found}/{args.count} = {found / args.count:.3f} with {args.trials} trials ({elapsed:.1f}s)")
    print(f"{'k':>3} {'delta':>5} {'found':>7} {'mean trials to hit':>19}")
    for key in sorted(totals):
        mean = used[key] / hits[key] if hits[key] else float("nan")
        print(f"{key[0]:>3} {key[1]:>5} {hits[key]:>3}/{totals[key]:<3} {mean:>19.1f}")


if __name__ == "__main__":
    main()
