"""Pairs ``(a1, a2)`` with a large coprime Frobenius number, built by CRT.

For ``a2 = -1 (mod a1)`` the equation ``a1*x + a2*y = q*a1*a2 + 1`` has exactly
``q`` nonnegative solutions

    x_l = (a2 + 1)/a1 + (q - l)*a2,    y_l = l*a1 - 1,    l = 1..q.

Since ``a1*x_l = a2*(1 + (q - l)*a1) + 1``, a prime ``p`` not dividing ``a1``
divides ``x_l`` iff ``a2 * (1 + (q - l)*a1) = -1 (mod p)``. Choosing one prime
factor ``p_l`` of each ``y_l`` and imposing that congruence for all of them
makes every solution non-coprime, so ``G(a1, a2) >= q*a1*a2 + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import INT64_MAX, CongruenceSystem, crt_solve, factorize, is_prime
from .coprime import count_coprime_reps
from .denumerant import CoprimePair, solutions
from .errors import DomainError


@dataclass(frozen=True)
class Assignment:
    ell: int
    x: int
    y: int
    p: int


@dataclass(frozen=True)
class AdversarialWitness:
    a1: int
    q: int
    a2: int
    n: int
    ell0: int
    assignments: tuple[Assignment, ...]
    system: CongruenceSystem = field(repr=False)

    @property
    def pair(self) -> CoprimePair:
        return CoprimePair(self.a1, self.a2)

    @property
    def log_a2(self) -> float:
        return math.log(self.a2)

    @property
    def p0(self) -> int:
        return self.assignments[self.ell0 - 1].p


def _check_preconditions(a1: int, q: int) -> None:
    if a1 <= 2:
        raise DomainError(f"a1 > 2 required, got a1={a1}")
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if q <= a1:
        raise DomainError(f"q > a1 required, got q={q}, a1={a1}")
    if (q + 1) % a1 == 0:
        raise DomainError(f"q = -1 mod a1: the construction requires q != -1 (mod a1), got q={q}, a1={a1}")


def construct_adversarial(a1: int, q: int) -> AdversarialWitness:
    _check_preconditions(a1, q)
    # unique l in [1, q] with q | l*a1 - 1
    ell0 = pow(a1, -1, q)
    order = [ell0] + [l for l in range(1, q + 1) if l != ell0]

    system = CongruenceSystem.of([(a1, -1)])
    chosen: dict[int, int] = {}
    used: list[int] = []
    for ell in order:
        y = ell * a1 - 1
        reuse = next((p for p in used if y % p == 0), None)
        if reuse is not None:
            # i*a1 = 1 = ell*a1 (mod p) gives i = ell (mod p): the old congruence covers x_ell
            chosen[ell] = reuse
            continue
        candidates = [p for p in factorize(y).primes if p != q]
        if not candidates:
            raise ArithmeticError(f"y_{ell} = {y} has no prime factor other than q")
        p = candidates[0]
        coef = (1 + (q - ell) * a1) % p
        if coef == 0:
            raise ArithmeticError(f"{p} divides 1 + (q - {ell})*a1; construction invariant broken")
        system = system.add(p, -pow(coef, -1, p))
        chosen[ell] = p
        used.append(p)

    r, modulus = crt_solve(system)
    a2 = r
    # a2 = -1 (mod a1) already gives gcd(a1, a2) = 1
    while a2 <= a1:
        a2 += modulus
    n = q * a1 * a2 + 1
    assignments = tuple(
        Assignment(ell, (a2 + 1) // a1 + (q - ell) * a2, ell * a1 - 1, chosen[ell])
        for ell in range(1, q + 1)
    )
    return AdversarialWitness(a1, q, a2, n, ell0, assignments, system)


def verify_adversarial(w: AdversarialWitness) -> bool:
    """Re-enumerate the solutions of ``a1*x + a2*y = n`` and check none is coprime.

    Independent of the assignments stored in the witness: it only trusts
    ``a1``, ``a2``, ``q`` and ``n``. The closed-form count is cross-checked too
    while ``n`` is inside the factorization range.
    """
    if math.gcd(w.a1, w.a2) != 1 or not 1 < w.a1 < w.a2 or w.n < 1:
        return False
    pair = CoprimePair(w.a1, w.a2)
    fam = solutions(w.n, pair)
    if fam.count != w.q:
        return False
    if any(math.gcd(x, y) == 1 for x, y in fam.members()):
        return False
    return w.n > INT64_MAX or count_coprime_reps(w.n, pair) == 0


def witness_problems(w: AdversarialWitness) -> list[str]:
    """Every structural claim of the construction, re-checked numerically."""
    issues = []
    a1, a2, q, n = w.a1, w.a2, w.q, w.n
    if a2 % a1 != a1 - 1:
        issues.append("a2 != -1 mod a1")
    if n != q * a1 * a2 + 1:
        issues.append("n != q*a1*a2 + 1")
    if sum(1 for l in range(1, q + 1) if (l * a1 - 1) % q == 0) != 1:
        issues.append("ell0 not unique")
    p0 = w.p0
    if p0 == q or math.gcd(p0, q * a1) != 1:
        issues.append(f"p0 = {p0} not coprime to q*a1")
    moduli = w.system.moduli
    if any(math.gcd(m1, m2) != 1 for i, m1 in enumerate(moduli) for m2 in moduli[i + 1 :]):
        issues.append("CRT moduli not pairwise coprime")
    for s in w.assignments:
        if s.y != s.ell * a1 - 1 or s.x != (a2 + 1) // a1 + (q - s.ell) * a2:
            issues.append(f"l={s.ell}: coordinates off the closed form")
        if a1 * s.x + a2 * s.y != n:
            issues.append(f"l={s.ell}: a1*x + a2*y != n")
        if s.x % s.p or s.y % s.p:
            issues.append(f"l={s.ell}: {s.p} does not divide gcd(x, y)")
    return issues
