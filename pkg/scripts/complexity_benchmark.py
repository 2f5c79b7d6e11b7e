"""Timing study: how fitting cost scales with the number of points.

The reduced circle fit pays one accumulation pass and then iterates on ten
numbers; the conic reweight baseline touches every point in every iteration.
This script sweeps n over several decades, prints the timing table, and
reports the two headline ratios between the largest and smallest n.

Usage:
    python scripts/complexity_benchmark.py
    python scripts/complexity_benchmark.py --n 1000 10000 100000 1000000 --json
"""

import argparse
import json
import sys

from gradfit.bench import run_bench


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+",
                    default=[1000, 10000, 100000, 1000000])
    ap.add_argument("--reps", type=int, default=7)
    ap.add_argument("--sigma", type=float, default=0.01)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    report = run_bench(args.n, repetitions=args.reps, seed=args.seed,
                       sigma=args.sigma)
    if args.json:
        json.dump(report.to_dict(), sys.stdout, indent=2, sort_keys=True)
        print()
        return 0

    print(report.table())
    lo, hi = min(args.n), max(args.n)
    if lo != hi:
        red = (report.row("reduced", hi).per_iteration_seconds
               / report.row("reduced", lo).per_iteration_seconds)
        rew = (report.row("reweight", hi).per_iteration_seconds
               / report.row("reweight", lo).per_iteration_seconds)
        acc = (report.row("reduced", hi).accumulation_seconds
               / report.row("reduced", lo).accumulation_seconds)
        print()
        print(f"n range {lo} -> {hi} ({hi / lo:.0f}x more points)")
        print(f"  reduced per-iteration cost grew  x{red:8.2f}   (flat)")
        print(f"  reweight per-iteration cost grew x{rew:8.2f}   (linear)")
        print(f"  accumulation cost grew           x{acc:8.2f}   "
              f"(one pass, linear)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
