"""Size of the CRT-built a2 versus the guaranteed lower bound G > q*a1*a2.

Usage: python scripts/adversarial_growth.py [--a1 3 4 5] [--q-max Q]
Prints one row per admissible (a1, q) with log(a2) and the verification result.
"""

import argparse
import math

from coprime_frobenius.adversarial import construct_adversarial, verify_adversarial
from coprime_frobenius.arith import is_prime
from coprime_frobenius.errors import DomainError


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--a1", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--q-max", type=int, default=60)
    args = ap.parse_args()

    print(f"{'a1':>3} {'q':>4} {'log a2':>9} {'q/log a2':>9} verified")
    for a1 in args.a1:
        for q in range(a1 + 1, args.q_max + 1):
            if not is_prime(q):
                continue
            try:
                w = construct_adversarial(a1, q)
            except DomainError:
                continue
            ok = verify_adversarial(w)
            print(f"{a1:>3} {q:>4} {w.log_a2:>9.2f} {q / math.log(w.a2):>9.3f} {ok}")


if __name__ == "__main__":
    main()
