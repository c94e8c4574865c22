"""Arithmetic primitives: sieves, factorization, multiplicative functions, CRT.

Scalar functions (``factorize``, ``mobius``, ...) work for any ``1 <= n < 2**63``.
Below the sieve bound they read a shared smallest-prime-factor table; above it
they fall back to wheel trial division followed by Miller-Rabin and
Pollard-Brent for whatever cofactor is left.

The ``*_table`` functions return numpy arrays indexed by ``n`` for the
range experiments, where per-integer Python calls would dominate.
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .config import default_budget
from .errors import DomainError

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    """``n`` together with its prime factorization, primes increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise DomainError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise DomainError(f"factors {self.factors} do not multiply to {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def radical(self) -> int:
        return math.prod(self.primes)

    def squarefree_divisors(self) -> Iterator[tuple[int, int]]:
        """Yield ``(d, mobius(d))`` for every squarefree divisor ``d``."""
        ps = self.primes
        for r in range(len(ps) + 1):
            sign = -1 if r % 2 else 1
            for combo in combinations(ps, r):
                yield math.prod(combo), sign

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)


@dataclass(frozen=True)
class CongruenceSystem:
    """A list of ``(modulus, residue)`` constraints; moduli checked at solve time."""

    constraints: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for m, r in self.constraints:
            if m < 2:
                raise DomainError(f"modulus must be >= 2, got {m}")
            if not 0 <= r < m:
                raise DomainError(f"residue {r} outside [0, {m})")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> CongruenceSystem:
        """Build a system, reducing each residue into ``[0, modulus)``."""
        return cls(tuple((m, r % m) for m, r in pairs))

    def add(self, modulus: int, residue: int) -> CongruenceSystem:
        return CongruenceSystem.of(self.constraints + ((modulus, residue),))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.constraints)

    def satisfied_by(self, x: int) -> bool:
        return all(x % m == r for m, r in self.constraints)


# ---------------------------------------------------------------------------
# sieves


def spf_table(limit: int) -> np.ndarray:
    """Smallest prime factor of every ``0 <= n <= limit`` (entries 0, 1 are 0)."""
    limit = max(int(limit), 1)
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


def primes_up_to(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def phi_table(limit: int) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in primes_up_to(limit):
        phi[p::p] -= phi[p::p] // p
    return phi


def omega_table(limit: int) -> np.ndarray:
    om = np.zeros(limit + 1, dtype=np.int64)
    for p in primes_up_to(limit):
        om[p::p] += 1
    return om


def mobius_table(limit: int) -> np.ndarray:
    mu = np.ones(limit + 1, dtype=np.int64)
    mu[0] = 0
    for p in primes_up_to(limit):
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


class _SharedSieve:
    """Lazily grown smallest-prime-factor table, read-only once published."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._spf = spf_table(1 << 16)

    def get(self, n: int) -> np.ndarray | None:
        spf = self._spf
        if n < len(spf):
            return spf
        bound = default_budget().sieve_bound
        if n > bound:
            return None
        with self._lock:
            if n >= len(self._spf):
                size = min(bound, max(n, 2 * len(self._spf)))
                self._spf = spf_table(size)
            return self._spf


_SIEVE = _SharedSieve()


# ---------------------------------------------------------------------------
# primality and factorization beyond the sieve

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic for ``n < 3.3 * 10**24``, which covers the int64 range."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


_WHEEL_INC = (4, 2, 4, 2, 4, 6, 2, 6)
_TRIAL_LIMIT = 1 << 16


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n, rng)
    _split(d, out, rng)
    _split(n // d, out, rng)


def _factor_large(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p, i = 7, 0
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += _WHEEL_INC[i]
        i = (i + 1) % 8
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            # seeded so results never depend on global random state
            _split(n, out, random.Random(n))
    return out


def factorize(n: int) -> Factorization:
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    if n > INT64_MAX:
        raise DomainError(f"n must be below 2**63, got {n}")
    spf = _SIEVE.get(n)
    if spf is None:
        fac = _factor_large(n)
    else:
        fac = {}
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            fac[p] = e
    return Factorization(n, tuple(sorted(fac.items())))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def omega(n: int) -> int:
    return len(factorize(n).factors)


def radical(n: int) -> int:
    return factorize(n).radical


@lru_cache(maxsize=64)
def primorial(k: int) -> int:
    """Product of the first ``k`` primes; ``primorial(0) == 1``."""
    prod, count, p = 1, 0, 1
    while count < k:
        p += 1
        if is_prime(p):
            prod *= p
            count += 1
    return prod


# ---------------------------------------------------------------------------
# gcd and CRT


def gcd_all(values: Sequence[int]) -> int:
    """gcd of a list with the convention ``gcd(x, 0) == x``.

    Raises DomainError for an empty or all-zero list: no positive ``n`` has
    the zero tuple as a representation, so that case only signals a bug.
    """
    if not values:
        raise DomainError("gcd_all of an empty list")
    g = reduce(math.gcd, (abs(int(v)) for v in values), 0)
    if g == 0:
        raise DomainError("gcd_all of an all-zero list is undefined")
    return g


def crt_solve(system: CongruenceSystem) -> tuple[int, int]:
    """Return ``(x, M)`` with ``x`` the unique solution in ``[0, M)``."""
    if not system.constraints:
        raise DomainError("empty congruence system")
    x, modulus = 0, 1
    for m, r in system.constraints:
        if math.gcd(modulus, m) != 1:
            raise DomainError("moduli not pairwise coprime")
        # lift x (mod modulus) to x' (mod modulus*m) with x' = r (mod m)
        t = (r - x) * pow(modulus, -1, m) % m
        x += modulus * t
        modulus *= m
    return x % modulus, modulus
