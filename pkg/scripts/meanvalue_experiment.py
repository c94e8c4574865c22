"""Exact partial sums S(N) of the error term next to sum 2**omega(n).

Usage: python scripts/meanvalue_experiment.py [--nmax N] [--pair a1 a2 ...]
Writes results/meanvalue_<a1>_<a2>.csv per pair and prints a short table.
"""

import argparse
import time
from pathlib import Path

from coprime_frobenius.denumerant import CoprimePair
from coprime_frobenius.meanvalue import error_partial_sums, two_omega_partial_sums, write_meanvalue_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=10**6)
    ap.add_argument("--pair", type=int, nargs=2, action="append")
    args = ap.parse_args()
    pairs = [CoprimePair(*p) for p in (args.pair or [(3, 5), (7, 90), (23, 29)])]

    out_dir = Path("results")
    out_dir.mkdir(exist_ok=True)
    for pair in pairs:
        t0 = time.time()
        series = error_partial_sums(pair, args.nmax)
        write_meanvalue_csv(series, out_dir / f"meanvalue_{pair.a1}_{pair.a2}.csv")
        envelope = {N: s for N, s, _ in two_omega_partial_sums(args.nmax, [c.N for c in series.checkpoints])}
        print(f"{pair}  ({time.time() - t0:.1f}s)")
        print(f"{'N':>10} {'S(N)':>14} {'|S|/(a1a2 sqrt N)':>18} {'sum 2^w':>12}")
        for c in series.checkpoints:
            print(f"{c.N:>10} {float(c.S):>14.3f} {c.normalized(pair):>18.4f} {envelope[c.N]:>12}")


if __name__ == "__main__":
    main()
