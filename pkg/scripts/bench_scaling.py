#!/usr/bin/env python3
"""Scaling experiment for the one-pass scan.

Times the truncated-variation query across path sizes, prints a table and
the log-log fit exponent (1.0 means linear), and compares the fast scan
against the quadratic oracle at a desk-scale size as a sanity check.
"""

import argparse
import time

import numpy as np

from truncvar import (
    GeneratorSpec,
    generate,
    oracle_truncated_variation,
    truncated_variation,
)
from truncvar._scan import NUMBA_ENABLED


def best_time(path, c, reps):
    best = np.inf
    for _ in range(reps):
        t0 = time.perf_counter()
        truncated_variation(path, c)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10**5, 10**6, 10**7])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-c", "--level", type=float, default=1.0)
    args = ap.parse_args()

    print(f"jit kernels: {'numba' if NUMBA_ENABLED else 'python fallback'}")
    warm = generate(GeneratorSpec("random-walk", 4096, seed=args.seed))
    truncated_variation(warm, args.level)

    check = generate(GeneratorSpec("random-walk", 2000, seed=args.seed))
    fast = truncated_variation(check, args.level)
    ref = oracle_truncated_variation(check, args.level)
    print(f"oracle cross-check at n=2000: |tv_fast - tv_dp| = {abs(fast.tv - ref.tv):.3e}")

    times = []
    print(f"{'n':>12} {'best_ms':>12} {'Msamples/s':>12}")
    for n in args.sizes:
        path = generate(GeneratorSpec("random-walk", n, seed=args.seed))
        reps = max(3, 2_000_000 // n)
        t = best_time(path, args.level, reps)
        times.append(t)
        print(f"{n:>12,} {t * 1e3:>12.3f} {n / t / 1e6:>12.1f}")
    if len(args.sizes) >= 2:
        slope = float(np.polyfit(np.log(args.sizes), np.log(times), 1)[0])
        print(f"log-log fit exponent: {slope:.3f}")


if __name__ == "__main__":
    main()
