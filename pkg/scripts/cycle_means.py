#!/usr/bin/env python3
"""Convergence of k * E[C_k] to 1 and of the total cycle count to log-order.

Writes CSV: n, k, mean, stderr, k_times_mean. A trailing section reports the
mean total cycle count against log n and the harmonic number.
"""
import argparse
import math
import sys

from parkfunc.moments import expected_k_cycles_mc, total_cycles_stats


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-grid", type=lambda s: [int(t) for t in s.split(",")],
                    default=[100, 300, 1000, 3000, 10000])
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=20240817)
    args = ap.parse_args()

    print("n,k,mean,stderr,k_times_mean")
    for n in args.n_grid:
        for est in expected_k_cycles_mc(n, args.k_max, args.samples, args.seed):
            print(f"{n},{est.k},{est.mean:.6f},{est.stderr:.6f},"
                  f"{est.k * est.mean:.6f}")

    print()
    print("n,total_mean,total_stderr,log_n,harmonic_n,mean_over_log_n")
    for n in args.n_grid:
        stats = total_cycles_stats(n, samples=args.samples, seed=args.seed)
        print(f"{n},{stats.mean:.6f},{stats.stderr:.6f},{math.log(n):.6f},"
              f"{float(stats.harmonic):.6f},{stats.mean / math.log(n):.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
