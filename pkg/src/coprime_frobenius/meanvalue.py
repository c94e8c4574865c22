"""Partial sums of the error term ``E(n) = f(n) - phi(n)/(a1*a2)`` and of ``2**omega(n)``.

All sums are exact. ``a1*a2*E(n)`` is an integer, so ``S(N) * a1*a2`` is
accumulated in int64 and converted to a :class:`~fractions.Fraction` only at
checkpoints.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .arith import omega_table, phi_table
from .config import Budget, default_budget
from .coprime import coprime_count_table
from .denumerant import Basis, CoprimePair
from .errors import BudgetExceeded, DomainError

log = logging.getLogger(__name__)

MONITOR_THRESHOLD = 10.0
MEANVALUE_HEADER = ("N", "S_num", "S_den", "normalized")


@dataclass(frozen=True)
class Checkpoint:
    N: int
    S: Fraction

    def normalized(self, pair: CoprimePair) -> float:
        return abs(self.S) / (pair.product * math.sqrt(self.N))


@dataclass(frozen=True)
class PartialSumSeries:
    pair: CoprimePair
    checkpoints: tuple[Checkpoint, ...]

    def rows(self) -> list[tuple[int, int, int, float]]:
        return [
            (c.N, c.S.numerator, c.S.denominator, c.normalized(self.pair)) for c in self.checkpoints
        ]


def default_checkpoints(n_max: int) -> list[int]:
    out, p = [], 1
    while p <= n_max:
        out.append(p)
        p *= 10
    if out[-1] != n_max:
        out.append(n_max)
    return out


def _check_range(n_max: int, checkpoints: Sequence[int], budget: Budget) -> list[int]:
    if n_max < 1:
        raise DomainError(f"N_max must be positive, got {n_max}")
    if n_max > budget.meanvalue_max:
        raise BudgetExceeded(f"N_max {n_max} exceeds budget {budget.meanvalue_max}")
    cps = sorted(set(int(c) for c in checkpoints))
    if cps and (cps[0] < 1 or cps[-1] > n_max):
        raise DomainError(f"checkpoints must lie in [1, {n_max}]")
    return cps


def scaled_error_terms(pair: CoprimePair, n_max: int) -> np.ndarray:
    """``a1*a2*E(n)`` for ``0 <= n <= n_max`` (entry 0 is 0)."""
    f = coprime_count_table(n_max, Basis.from_pair(pair))
    scaled = pair.product * f - phi_table(n_max)
    scaled[0] = 0
    return scaled


def error_partial_sums(
    pair: CoprimePair,
    n_max: int,
    checkpoints: Sequence[int] | None = None,
    *,
    budget: Budget | None = None,
) -> PartialSumSeries:
    budget = budget or default_budget()
    if checkpoints is None:
        checkpoints = default_checkpoints(n_max)
    cps = _check_range(n_max, checkpoints, budget)
    if not cps:
        return PartialSumSeries(pair, ())
    cum = np.cumsum(scaled_error_terms(pair, cps[-1]))
    series = PartialSumSeries(
        pair, tuple(Checkpoint(N, Fraction(int(cum[N]), pair.product)) for N in cps)
    )
    _monitor(series)
    return series


def _monitor(series: PartialSumSeries) -> None:
    # heuristic envelope only: the conditional bound has no explicit constant
    if series.pair.a2 > 50:
        return
    for c in series.checkpoints:
        if 10**3 <= c.N <= 10**6 and c.normalized(series.pair) >= MONITOR_THRESHOLD:
            log.warning(
                "|S(%d)|/(a1*a2*sqrt(N)) = %.3f for %s exceeds %.1f",
                c.N, c.normalized(series.pair), series.pair, MONITOR_THRESHOLD,
            )


def two_omega_partial_sums(
    n_max: int, checkpoints: Sequence[int] | None = None, *, budget: Budget | None = None
) -> list[tuple[int, int, float]]:
    """Rows ``(N, sum_{n<=N} 2**omega(n), sum / (N log N))``; the ratio is NaN at N=1."""
    budget = budget or default_budget()
    if checkpoints is None:
        checkpoints = default_checkpoints(n_max)
    cps = _check_range(n_max, checkpoints, budget)
    if not cps:
        return []
    vals = np.left_shift(1, omega_table(cps[-1]))
    vals[0] = 0
    cum = np.cumsum(vals)
    rows = []
    for N in cps:
        s = int(cum[N])
        ratio = s / (N * math.log(N)) if N > 1 else math.nan
        rows.append((N, s, ratio))
    return rows


def write_meanvalue_csv(series: PartialSumSeries, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(MEANVALUE_HEADER)
        for N, num, den, norm in series.rows():
            w.writerow((N, num, den, repr(norm)))


def read_meanvalue_csv(path: str | Path) -> list[tuple[int, Fraction, float]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if tuple(rows[0]) != MEANVALUE_HEADER:
        raise ValueError(f"unexpected header {rows[0]}")
    return [(int(N), Fraction(int(a), int(b)), float(z)) for N, a, b, z in rows[1:]]
