"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 resource/budget error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .adversarial import construct_adversarial, verify_adversarial
from .coprime import (
    coprime_count_table,
    coprime_frobenius,
    coprime_frobenius_k,
    count_coprime_reps,
    gap_report,
)
from .denumerant import Basis, CoprimePair, count_reps, count_reps_k, sylvester_frobenius
from .errors import BudgetExceeded, DomainError
from .jacobsthal import ShiftConstraintSet, jacobsthal, jacobsthal_general
from .meanvalue import default_checkpoints, error_partial_sums, write_meanvalue_csv
from .prime_powers import count_prime_power_reps, scan_zero_pairs
from .scan import run_scan

EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _shift_list(text: str) -> dict[int, int]:
    out = {}
    for item in text.split(","):
        try:
            p, c = item.split(":")
            out[int(p)] = int(c)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected p:c items, got {item!r}") from None
    return out


def _emit(value, as_json: bool, doc: dict | None = None) -> None:
    if as_json:
        print(json.dumps(doc if doc is not None else value, sort_keys=True))
    else:
        print(value)


def cmd_gnum(args) -> int:
    print(sylvester_frobenius(CoprimePair(args.a1, args.a2)))
    return 0


def cmd_count(args) -> int:
    basis = Basis(tuple(args.basis))
    n = args.n
    is_pair = basis.k == 2 and basis.coefficients[0] > 1
    if args.coprime:
        if n < 1:
            value = 0
        elif is_pair:
            value = count_coprime_reps(n, basis.as_pair())
        else:
            value = int(coprime_count_table(n, basis)[n])
    elif is_pair and n >= 1:
        value = count_reps(n, basis.as_pair())
    else:
        value = count_reps_k(n, basis)
    print(value)
    return 0


def cmd_bigG(args) -> int:
    res = coprime_frobenius(CoprimePair(args.a1, args.a2), workers=args.workers)
    if args.json:
        _emit(None, True, res.as_dict())
    else:
        print(res.value)
        print(f"certified={'true' if res.certified else 'false'} cutoff={res.cutoff_used}", file=sys.stderr)
    return 0


def cmd_bigG_k(args) -> int:
    res = coprime_frobenius_k(Basis(tuple(args.basis)), args.window)
    if args.json:
        _emit(None, True, res.as_dict())
    else:
        print(res.value)
        print(f"certified=false horizon={res.cutoff_used}", file=sys.stderr)
    return 0


def cmd_jacobsthal(args) -> int:
    print(jacobsthal(args.n))
    return 0


def cmd_jacobsthal_gen(args) -> int:
    print(jacobsthal_general(ShiftConstraintSet.of(args.constraints)))
    return 0


def cmd_pi(args) -> int:
    res = count_prime_power_reps(args.k, CoprimePair(args.a1, args.a2))
    doc = {"k": res.k, "a1": res.pair.a1, "a2": res.pair.a2, "count": res.count,
           "witnesses": list(res.witnesses)}
    _emit(res.count, args.json, doc)
    return 0


def cmd_zero_scan(args) -> int:
    for pair in scan_zero_pairs(args.k, args.a1_max, args.a2_max, a1_min=args.a1_min):
        print(f"{pair.a1},{pair.a2}")
    return 0


def cmd_adversarial(args) -> int:
    w = construct_adversarial(args.a1, args.q)
    ok = verify_adversarial(w) if args.verify else None
    if args.json:
        doc = {
            "a1": w.a1, "q": w.q, "a2": w.a2, "n": w.n, "ell0": w.ell0, "log_a2": w.log_a2,
            "assignments": [[s.ell, s.x, s.y, s.p] for s in w.assignments],
        }
        if ok is not None:
            doc["verified"] = ok
        _emit(None, True, doc)
    else:
        print(f"a2={w.a2} n={w.n}")
        for s in w.assignments:
            print(f"l={s.ell} x={s.x} y={s.y} p={s.p}")
        if ok is not None:
            print(f"verified={'true' if ok else 'false'}")
    return 0 if ok in (None, True) else EXIT_DOMAIN


def cmd_meanvalue(args) -> int:
    pair = CoprimePair(args.a1, args.a2)
    cps = args.checkpoints or default_checkpoints(args.nmax)
    series = error_partial_sums(pair, args.nmax, cps)
    write_meanvalue_csv(series, args.out)
    return 0


def cmd_scan(args) -> int:
    run_scan(args.a1_max, args.a2_max, args.out, cache=args.cache, workers=args.workers)
    return 0


def cmd_gaps(args) -> int:
    rep = gap_report(CoprimePair(args.a1, args.a2))
    _emit(f"{rep.ell} {rep.L}", args.json, rep.as_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coprime-frobenius", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def pair_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("a1", type=int)
        p.add_argument("a2", type=int)
        p.set_defaults(func=func)
        return p

    pair_cmd("gnum", cmd_gnum, "classical Frobenius number a1*a2 - a1 - a2")

    p = sub.add_parser("count", help="representation count of n")
    p.add_argument("n", type=int)
    p.add_argument("--basis", type=_int_list, required=True)
    p.add_argument("--coprime", action="store_true", help="only count gcd-1 representations")
    p.set_defaults(func=cmd_count)

    p = pair_cmd("bigG", cmd_bigG, "certified coprime Frobenius number")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bigG-k", help="heuristic coprime Frobenius number, k >= 3")
    p.add_argument("basis", type=_int_list)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bigG_k)

    p = sub.add_parser("jacobsthal", help="Jacobsthal function j(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_jacobsthal)

    p = sub.add_parser("jacobsthal-gen", help="shifted Jacobsthal function, p1:c1,p2:c2,...")
    p.add_argument("constraints", type=_shift_list)
    p.set_defaults(func=cmd_jacobsthal_gen)

    p = sub.add_parser("pi", help="count representable prime k-th powers below g")
    p.add_argument("k", type=int)
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("zero-scan", help="pairs with no representable prime k-th power")
    p.add_argument("k", type=int)
    p.add_argument("--a1-max", type=int, required=True)
    p.add_argument("--a2-max", type=int, required=True)
    p.add_argument("--a1-min", type=int, default=2)
    p.set_defaults(func=cmd_zero_scan)

    p = sub.add_parser("adversarial", help="build a2 with G(a1, a2) > q*a1*a2")
    p.add_argument("a1", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_adversarial)

    p = pair_cmd("meanvalue", cmd_meanvalue, "exact partial sums of the error term, as CSV")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--checkpoints", type=_int_list, default=None)

    p = sub.add_parser("scan", help="scan all coprime pairs into a CSV table")
    p.add_argument("--a1-max", type=int, required=True)
    p.add_argument("--a2-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = pair_cmd("gaps", cmd_gaps, "longest non-representable runs ell and L")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if args.command is None:
        print(parser.format_usage(), end="", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


cmd_dispatch = main

if __name__ == "__main__":
    sys.exit(main())
