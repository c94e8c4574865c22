"""Pairs with no representable prime k-th power below the Frobenius number.

Usage: python scripts/zero_pairs.py [--k K] [--a1-max A] [--a2-max B] [--a1-min M]
Also re-checks the four infinite families for g <= 50.
"""

import argparse

from coprime_frobenius.prime_powers import scan_zero_pairs, verify_zero_families


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--a1-max", type=int, default=41)
    ap.add_argument("--a2-max", type=int, default=800)
    ap.add_argument("--a1-min", type=int, default=2)
    args = ap.parse_args()

    print("families hold for g <= 50:", verify_zero_families(50))
    pairs = scan_zero_pairs(args.k, args.a1_max, args.a2_max, a1_min=args.a1_min)
    by_a1: dict[int, list[int]] = {}
    for p in pairs:
        by_a1.setdefault(p.a1, []).append(p.a2)
    for a1, a2s in sorted(by_a1.items()):
        print(f"a1={a1}: {a2s}")
    print(f"{len(pairs)} pairs with pi_{args.k} = 0")


if __name__ == "__main__":
    main()
