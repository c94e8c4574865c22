"""Coprime representation counts, the error term, and the coprime Frobenius number.

``f(n)`` counts ``(x1, ..., xk) >= 0`` with ``sum(a_i * x_i) = n`` and
``gcd(x1, ..., xk) = 1``. For two coefficients it has a closed form through
Moebius inversion of the ordinary count; the brute-force oracle here checks it.

``G`` is the largest ``n`` with ``f(n) = 0``. For pairs the search is certified:
it scans every ``n`` up to :func:`~coprime_frobenius.jacobsthal.certified_cutoff`,
beyond which ``f(n) > 0`` is proved. For ``k >= 3`` only a heuristic stability
window is available and results carry ``certified=False``.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import euler_phi, factorize, mobius_table, omega
from .config import Budget, default_budget
from .denumerant import (
    Basis,
    CoprimePair,
    count_reps,
    count_table_pair,
    denumerant_table,
    residue_r,
    solutions,
    sylvester_frobenius,
)
from .errors import BudgetExceeded, DomainError
from .jacobsthal import certified_cutoff

log = logging.getLogger(__name__)

CHUNK = 1 << 20


@dataclass(frozen=True)
class ErrorTermValue:
    n: int
    pair: CoprimePair
    value: Fraction

    def bound(self) -> int:
        return 2 ** omega(self.n)


@dataclass(frozen=True)
class GResult:
    basis: Basis
    value: int
    certified: bool
    cutoff_used: int

    def as_dict(self) -> dict:
        return {
            "basis": list(self.basis.coefficients),
            "value": self.value,
            "certified": self.certified,
            "cutoff_used": self.cutoff_used,
        }


@dataclass(frozen=True)
class GapReport:
    pair: CoprimePair
    ell: int
    L: int

    def as_dict(self) -> dict:
        return {"a1": self.pair.a1, "a2": self.pair.a2, "ell": self.ell, "L": self.L}


# ---------------------------------------------------------------------------
# counts


def count_coprime_reps(n: int, pair: CoprimePair) -> int:
    """``f(n)`` as the Moebius transform of the closed-form ordinary count."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return sum(mu * count_reps(n // d, pair) for d, mu in factorize(n).squarefree_divisors())


def _estimate_tuples(n: int, coeffs: tuple[int, ...]) -> int:
    est = 1
    for a in coeffs[1:]:
        est *= n // a + 1
    return est


def count_coprime_reps_oracle(n: int, basis: Basis, *, budget: Budget | None = None) -> int:
    """Brute-force ``f(n)``: enumerate every representation and test its gcd.

    Pairs walk the solution family. Longer bases recurse over the larger
    coefficients and vectorise over the two smallest.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    budget = budget or default_budget()
    coeffs = basis.coefficients
    est = _estimate_tuples(n, coeffs)
    if est > budget.oracle_tuples:
        raise BudgetExceeded(f"oracle would enumerate ~{est} tuples (budget {budget.oracle_tuples})")
    if n == 0:
        return 0
    if basis.k == 2 and coeffs[0] > 1 and coeffs[0] < coeffs[1]:
        fam = solutions(n, basis.as_pair())
        return sum(1 for x, y in fam.members() if math.gcd(x, y) == 1)

    a_small, a_next, outer = coeffs[0], coeffs[1], coeffs[:1:-1]

    def tail(m: int, g: int) -> int:
        y = np.arange(m // a_next + 1, dtype=np.int64)
        rem = m - a_next * y
        ok = rem % a_small == 0
        x = rem[ok] // a_small
        gg = np.gcd(np.gcd(x, y[ok]), g)
        return int(np.count_nonzero(gg == 1))

    def rec(i: int, m: int, g: int) -> int:
        if i == len(outer):
            return tail(m, g)
        a = outer[i]
        return sum(rec(i + 1, m - a * x, math.gcd(g, x)) for x in range(m // a + 1))

    return rec(0, n, 0)


def coprime_count_table(limit: int, basis: Basis) -> np.ndarray:
    """``f(n)`` for ``0 <= n <= limit`` (entry 0 is 0) by Dirichlet convolution.

    ``f = mu * g``: each squarefree ``d`` adds ``mu(d) * g(m)`` to ``f(d*m)``.
    """
    if basis.k == 2 and basis.coefficients[0] > 1:
        g = count_table_pair(limit, basis.as_pair())
    else:
        g = denumerant_table(limit, basis)
    mu = mobius_table(limit)
    f = np.zeros(limit + 1, dtype=g.dtype)
    for d in np.flatnonzero(mu):
        d = int(d)
        f[d::d] += int(mu[d]) * g[1 : limit // d + 1]
    return f


def error_term(n: int, pair: CoprimePair) -> ErrorTermValue:
    """``E(n) = f(n) - phi(n)/(a1*a2)`` from its explicit divisor-sum form.

    Each divisor ``d`` contributes ``mu(n/d) * (1 - r_d/a1 - {(d - a2*r_d)/(a1*a2)})``.
    Summed as integers over the common denominator ``a1*a2``.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    P = pair.product
    total = 0
    for e, mu in factorize(n).squarefree_divisors():
        d = n // e
        r = residue_r(d, pair)
        total += mu * (P - pair.a2 * r - (d - pair.a2 * r) % P)
    return ErrorTermValue(n, pair, Fraction(total, P))


def main_term(n: int, pair: CoprimePair) -> Fraction:
    return Fraction(euler_phi(n), pair.product)


# ---------------------------------------------------------------------------
# G search for pairs


def zeros_in_range(a1: int, a2: int, lo: int, hi: int) -> np.ndarray:
    """All ``n`` in ``[lo, hi)``, ``lo >= 1``, with no coprime representation.

    Walks every solution family in lockstep: at step ``k`` each still-open
    ``n`` tests ``gcd(x0 - k*a2, y0 + k*a1)`` and closes on the first hit.
    """
    n = np.arange(lo, hi, dtype=np.int64)
    y0 = n * pow(a2, -1, a1) % a1
    rem = n - a2 * y0
    count = np.where(rem >= 0, rem // (a1 * a2) + 1, 0)
    x0 = rem // a1
    open_idx = np.flatnonzero(count > 0)
    found = np.zeros(len(n), dtype=bool)
    k = 0
    while len(open_idx):
        x = x0[open_idx] - k * a2
        y = y0[open_idx] + k * a1
        hit = np.gcd(x, y) == 1
        found[open_idx[hit]] = True
        open_idx = open_idx[~hit]
        k += 1
        open_idx = open_idx[count[open_idx] > k]
    return n[~found]


def _zeros_task(args: tuple[int, int, int, int]) -> np.ndarray:
    return zeros_in_range(*args)


def _zeros_upto(pair: CoprimePair, upper: int, workers: int = 1) -> np.ndarray:
    tasks = [(pair.a1, pair.a2, lo, min(lo + CHUNK, upper + 1)) for lo in range(1, upper + 1, CHUNK)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_zeros_task, tasks))
    else:
        parts = [_zeros_task(t) for t in tasks]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def coprime_frobenius(pair: CoprimePair, *, budget: Budget | None = None, workers: int = 1) -> GResult:
    """Exact ``G`` for a pair, certified by a full scan up to the proven cutoff."""
    budget = budget or default_budget()
    cutoff = certified_cutoff(pair)
    if cutoff > budget.cutoff_ceiling:
        raise BudgetExceeded(
            f"certified cutoff {cutoff} for {pair} exceeds the ceiling {budget.cutoff_ceiling}; "
            "raise it (e.g. via COPRIME_FROBENIUS_BUDGET) to run this search"
        )
    zeros = _zeros_upto(pair, cutoff, workers)
    # f(a1*a2) = 0 always, so zeros is never empty
    return GResult(Basis.from_pair(pair), int(zeros.max()), True, cutoff)


def _longest_consecutive(values: np.ndarray) -> int:
    if len(values) == 0:
        return 0
    breaks = np.flatnonzero(np.diff(values) != 1)
    bounds = np.concatenate([[-1], breaks, [len(values) - 1]])
    return int(np.diff(bounds).max())


def gap_report(pair: CoprimePair, G: int | None = None) -> GapReport:
    """Longest runs of non-representable integers, ordinary and coprime.

    ``ell`` scans ``[0, g]`` with ``g`` the Frobenius number; ``L`` scans
    ``[1, G]`` (``f`` is only defined for positive ``n``). Pass ``G`` to
    skip the certified search when it is already known.
    """
    g_f = sylvester_frobenius(pair)
    table = count_table_pair(max(g_f, 0), pair)
    ell = _longest_consecutive(np.flatnonzero(table == 0))
    if ell != pair.a1 - 1:
        raise ArithmeticError(f"gap scan gave ell={ell} for {pair}, expected {pair.a1 - 1}")
    if G is None:
        G = coprime_frobenius(pair).value
    zeros = zeros_in_range(pair.a1, pair.a2, 1, G + 1)
    return GapReport(pair, ell, _longest_consecutive(zeros))


# ---------------------------------------------------------------------------
# G search for k >= 3


def coprime_frobenius_k(basis: Basis, stability_window: int, *, budget: Budget | None = None) -> GResult:
    """Heuristic ``G`` for three or more coefficients.

    Scans ``f`` upward with a doubling horizon and returns the last zero once
    ``stability_window`` consecutive positive values follow it.
    """
    if basis.k < 3:
        raise DomainError("use coprime_frobenius for k=2")
    if stability_window < 1:
        raise DomainError(f"stability window must be positive, got {stability_window}")
    budget = budget or default_budget()
    horizon = max(4 * stability_window, 1 << 12)
    while True:
        horizon = min(horizon, budget.k_horizon)
        f = coprime_count_table(horizon, basis)
        zeros = np.flatnonzero(f[1:] == 0) + 1
        last = int(zeros[-1]) if len(zeros) else 0
        if horizon - last >= stability_window:
            log.debug("basis %s: last zero %d, horizon %d", basis.coefficients, last, horizon)
            return GResult(basis, last, False, horizon)
        if horizon >= budget.k_horizon:
            raise BudgetExceeded(
                f"no clean window of {stability_window} before horizon {budget.k_horizon} "
                f"for basis {basis.coefficients}"
            )
        horizon *= 2
