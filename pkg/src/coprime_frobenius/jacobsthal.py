"""Jacobsthal functions and the certified search cutoff for the coprime Frobenius number.

``jacobsthal(n)`` is the least ``m`` such that every ``m`` consecutive integers
contain one coprime to ``n``. The shifted variant forbids one arbitrary residue
``c_p`` per prime instead of 0. Both are computed exactly by scanning one full
period of the "bad" indicator and taking the longest cyclic run of bad
residues, plus one.

``jacobsthal_covering`` is a second, independent route for the classical
function: a depth-first search over which prime covers the first uncovered
position. It costs O(omega(n)!) instead of O(rad(n)) and is what makes
checks over every ``n <= 10**5`` affordable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .arith import factorize, is_prime, primorial
from .config import Budget, default_budget
from .denumerant import CoprimePair
from .errors import BudgetExceeded, DomainError


@dataclass(frozen=True)
class ShiftConstraintSet:
    """Distinct primes ``p`` with one forbidden residue ``c_p`` in ``[0, p)`` each."""

    primes: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.primes) != len(self.shifts):
            raise DomainError("primes and shifts must have the same length")
        if len(set(self.primes)) != len(self.primes):
            raise DomainError(f"primes must be distinct, got {self.primes}")
        for p, c in zip(self.primes, self.shifts):
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            if not 0 <= c < p:
                raise DomainError(f"shift {c} outside [0, {p})")

    @classmethod
    def of(cls, mapping: dict[int, int] | Sequence[tuple[int, int]]) -> ShiftConstraintSet:
        items = sorted(dict(mapping).items())
        return cls(tuple(p for p, _ in items), tuple(c % p for p, c in items))

    @property
    def period(self) -> int:
        return math.prod(self.primes)


def _longest_cyclic_run(bad: np.ndarray) -> int:
    """Length of the longest run of True in ``bad`` read as a cycle."""
    if bad.all():
        raise DomainError("every residue is excluded, no window length works")
    if not bad.any():
        return 0
    # rotate so the array starts just after a good position; no run wraps then
    start = int(np.flatnonzero(~bad)[0])
    rolled = np.concatenate([bad[start + 1 :], bad[: start + 1]])
    padded = np.concatenate([[False], rolled, [False]]).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return int((ends - starts).max())


def jacobsthal_general(constraints: ShiftConstraintSet, *, budget: Budget | None = None) -> int:
    """Least ``m`` such that every ``m`` consecutive integers hit an allowed residue."""
    budget = budget or default_budget()
    period = constraints.period
    if period > budget.radical_max:
        raise BudgetExceeded(
            f"period {period} exceeds radical budget {budget.radical_max}"
        )
    bad = np.zeros(period, dtype=bool)
    for p, c in zip(constraints.primes, constraints.shifts):
        bad[c::p] = True
    return _longest_cyclic_run(bad) + 1


def jacobsthal(n: int, *, budget: Budget | None = None) -> int:
    if n < 1:
        raise DomainError(f"jacobsthal needs n >= 1, got {n}")
    primes = factorize(n).primes
    return jacobsthal_general(ShiftConstraintSet(primes, (0,) * len(primes)), budget=budget)


@lru_cache(maxsize=None)
def _covering_run(primes: tuple[int, ...]) -> int:
    best = 0

    def search(assigned: dict[int, int], u: int) -> None:
        # u = first position in 1, 2, ... not covered by the assigned classes
        nonlocal best
        while any(u % p == c for p, c in assigned.items()):
            u += 1
        if u - 1 > best:
            best = u - 1
        # any longer run must cover u with a prime not yet placed
        for p in [p for p in primes if p not in assigned]:
            assigned[p] = u % p
            search(assigned, u + 1)
            del assigned[p]

    search({}, 1)
    return best


def jacobsthal_covering(n: int) -> int:
    """Classical ``j(n)`` by exhaustive covering search over the primes of ``n``."""
    if n < 1:
        raise DomainError(f"jacobsthal needs n >= 1, got {n}")
    return _covering_run(factorize(n).primes) + 1


def certified_cutoff(pair: CoprimePair) -> int:
    """A bound ``U`` such that every ``n > U`` has a coprime representation.

    With ``P = a1*a2`` and ``B_k = P*(2**k + 1)``, ``U`` is the largest ``B_k``
    over ``k`` with ``primorial(k) <= B_k``. Take ``n > U`` and ``k = omega(n)``.
    If ``k`` qualifies then ``n > U >= B_k``; otherwise ``n >= primorial(k) > B_k``.
    Either way ``n // P >= 2**k + 1``. The ``n // P`` consecutive shift indices of
    the solution family contain one avoiding every prime's bad class once
    ``n // P >= j_C(n)``, and ``j_C(n) <= j(n) <= 2**omega(n)`` (shifted
    classes reduce to the classical function; Kanold's bound).
    """
    prod = pair.product
    best = 0
    k = 0
    # primorial(k) / (2**k + 1) is nondecreasing, so qualifying k form a prefix
    while primorial(k) <= prod * (2**k + 1):
        best = prod * (2**k + 1)
        k += 1
    return best
