"""Prime powers ``p**k <= g`` representable as ``a1*x + a2*y`` with ``x, y >= 0``.

``g`` is the Frobenius number ``a1*a2 - a1 - a2``; a prime power equal to ``g``
is counted when representable (it never is, but the boundary is inclusive).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .arith import primes_up_to
from .denumerant import CoprimePair, count_reps, sylvester_frobenius
from .errors import DomainError

log = logging.getLogger(__name__)

# a, and b = a*g + (a - 1) for g >= 0
ZERO_FAMILIES = (6, 8, 12, 24)


@dataclass(frozen=True)
class PrimePowerCount:
    k: int
    pair: CoprimePair
    witnesses: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)


def iroot(n: int, k: int) -> int:
    """Largest ``r >= 0`` with ``r**k <= n``."""
    if n < 0:
        raise DomainError("iroot of a negative number")
    if n < 2 or k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def _representable(m: int, pair: CoprimePair) -> bool:
    return count_reps(m, pair) > 0


def count_prime_power_reps(k: int, pair: CoprimePair) -> PrimePowerCount:
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    g = sylvester_frobenius(pair)
    wits = tuple(
        int(p) for p in primes_up_to(iroot(g, k)) if _representable(int(p) ** k, pair)
    )
    return PrimePowerCount(k, pair, wits)


def zero_family_failures(g_max: int) -> list[str]:
    """Counterexamples to the four vanishing families for ``0 <= g <= g_max``.

    Besides the count itself, every prime ``p >= 5`` with ``p**2 <= g_F`` is
    checked against the obstruction ``p**2 = 1 (mod 24)``.
    """
    if g_max < 0:
        raise DomainError(f"g_max must be nonnegative, got {g_max}")
    failures = []
    for a in ZERO_FAMILIES:
        for g in range(g_max + 1):
            b = a * g + a - 1
            # at g = 0 the second entry is a - 1 < a; counts are symmetric
            pair = CoprimePair.sorted(a, b)
            res = count_prime_power_reps(2, pair)
            if res.count:
                failures.append(f"pi_2{pair} = {res.count}, witnesses {res.witnesses}")
            for p in primes_up_to(iroot(sylvester_frobenius(pair), 2)):
                if p >= 5 and int(p) ** 2 % 24 != 1:
                    failures.append(f"{p}**2 mod 24 = {int(p) ** 2 % 24}")
    return failures


def verify_zero_families(g_max: int) -> bool:
    failures = zero_family_failures(g_max)
    for msg in failures:
        log.warning("zero family counterexample: %s", msg)
    return not failures


def scan_zero_pairs(k: int, a1_max: int, a2_max: int, *, a1_min: int = 2) -> list[CoprimePair]:
    """Coprime pairs ``a1_min <= a1 <= a1_max``, ``a1 < a2 <= a2_max`` with no
    representable ``k``-th prime power below the Frobenius number."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if a1_max < 3 or a2_max < 3:
        raise DomainError("scan bounds must be at least 3")
    g_top = a1_max * a2_max
    primes = [int(p) for p in primes_up_to(iroot(g_top, k))]
    powers = [p**k for p in primes]
    found = []
    for a1 in range(max(a1_min, 2), a1_max + 1):
        for a2 in range(a1 + 1, a2_max + 1):
            try:
                pair = CoprimePair(a1, a2)
            except DomainError:
                continue
            g = sylvester_frobenius(pair)
            if not any(_representable(m, pair) for m in powers if m <= g):
                found.append(pair)
    return found
