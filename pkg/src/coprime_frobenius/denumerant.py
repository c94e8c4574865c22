"""Unrestricted representation counts for ``a1*x + a2*y = n`` and its k-term analogue."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, order=True)
class CoprimePair:
    """Coprime pair with ``1 < a1 < a2``."""

    a1: int
    a2: int

    def __post_init__(self) -> None:
        if math.gcd(self.a1, self.a2) != 1:
            raise DomainError("gcd(a1,a2) must be 1")
        if not 1 < self.a1 < self.a2:
            raise DomainError(f"need 1 < a1 < a2, got ({self.a1}, {self.a2})")

    @classmethod
    def sorted(cls, a: int, b: int) -> CoprimePair:
        """Build a pair from two values given in either order."""
        return cls(min(a, b), max(a, b))

    @property
    def product(self) -> int:
        return self.a1 * self.a2

    def __str__(self) -> str:
        return f"({self.a1},{self.a2})"


@dataclass(frozen=True)
class Basis:
    """Positive coefficients ``a1 <= ... <= ak`` with overall gcd 1, ``k >= 2``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(sorted(int(a) for a in self.coefficients))
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2:
            raise DomainError("a basis needs at least two coefficients")
        if coeffs[0] < 1:
            raise DomainError(f"coefficients must be positive, got {coeffs}")
        if reduce(math.gcd, coeffs) != 1:
            raise DomainError(f"coefficients {coeffs} must have gcd 1")

    @classmethod
    def of(cls, *coeffs: int) -> Basis:
        return cls(tuple(coeffs))

    @classmethod
    def from_pair(cls, pair: CoprimePair) -> Basis:
        return cls((pair.a1, pair.a2))

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def as_pair(self) -> CoprimePair:
        if self.k != 2:
            raise DomainError(f"basis {self.coefficients} is not a pair")
        return CoprimePair(*self.coefficients)


@dataclass(frozen=True)
class SolutionFamily:
    """All nonnegative solutions ``(x0 - k*a2, y0 + k*a1)``, ``k < count``.

    ``y0`` is the least admissible second coordinate; when ``count == 0``
    there are no solutions and ``x0`` is set to 0.
    """

    pair: CoprimePair
    n: int
    x0: int
    y0: int
    count: int

    def members(self) -> Iterator[tuple[int, int]]:
        a1, a2 = self.pair.a1, self.pair.a2
        for k in range(self.count):
            yield self.x0 - k * a2, self.y0 + k * a1

    def __len__(self) -> int:
        return self.count


def residue_r(n: int, pair: CoprimePair) -> int:
    """The unique ``0 <= r < a1`` with ``a2*r == n (mod a1)``."""
    return n * pow(pair.a2, -1, pair.a1) % pair.a1


def count_reps(n: int, pair: CoprimePair) -> int:
    """Number of ``(x, y) >= 0`` with ``a1*x + a2*y = n``, in O(1)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    r = residue_r(n, pair)
    # floor division rounds toward -inf, giving 0 when n < a2*r
    return (n - pair.a2 * r) // pair.product + 1


def solutions(n: int, pair: CoprimePair) -> SolutionFamily:
    y0 = residue_r(n, pair)
    count = count_reps(n, pair)
    x0 = (n - pair.a2 * y0) // pair.a1 if count else 0
    return SolutionFamily(pair, n, x0, y0, count)


def sylvester_frobenius(pair: CoprimePair) -> int:
    return pair.a1 * pair.a2 - pair.a1 - pair.a2


def _needs_object(limit: int, coeffs: Sequence[int]) -> bool:
    # crude upper bound on the denumerant: prod(limit/a_i + 1) over all but a1
    bound = 1
    for a in coeffs[1:]:
        bound *= limit // a + 1
    return bound >= 2**62


def denumerant_table(limit: int, basis: Basis) -> np.ndarray:
    """``table[m]`` = number of representations of ``m`` for ``0 <= m <= limit``.

    Coin-change DP, one pass per coefficient. A pass for coefficient ``a`` is a
    cumulative sum along each residue class mod ``a``, done by reshaping.
    Switches to Python ints when int64 could overflow.
    """
    if limit < 0:
        raise DomainError(f"limit must be nonnegative, got {limit}")
    dtype = object if _needs_object(limit, basis.coefficients) else np.int64
    table = np.zeros(limit + 1, dtype=dtype)
    table[0] = 1
    for a in basis.coefficients:
        rows = -(-(limit + 1) // a)
        padded = np.zeros(rows * a, dtype=dtype)
        padded[: limit + 1] = table
        table = np.cumsum(padded.reshape(rows, a), axis=0).reshape(-1)[: limit + 1]
    return table


def count_reps_k(n: int, basis: Basis) -> int:
    """Number of nonnegative tuples with ``sum(a_i * x_i) = n``; 1 for ``n = 0``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return int(denumerant_table(n, basis)[n])


def count_table_pair(limit: int, pair: CoprimePair) -> np.ndarray:
    """Vectorised ``count_reps`` for ``0 <= n <= limit`` (entry 0 is 1)."""
    n = np.arange(limit + 1, dtype=np.int64)
    r = n * pow(pair.a2, -1, pair.a1) % pair.a1
    return (n - pair.a2 * r) // pair.product + 1
