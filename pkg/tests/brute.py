"""Independent brute-force oracles. Deliberately import nothing from the package."""

from fractions import Fraction
from itertools import product
from math import gcd, prod


def reps(n, coeffs):
    """All nonnegative tuples x with sum(a*x) == n, by nested enumeration."""
    ranges = [range(n // a + 1) for a in coeffs[:-1]]
    out = []
    for head in product(*ranges):
        rest = n - sum(a * x for a, x in zip(coeffs, head))
        if rest >= 0 and rest % coeffs[-1] == 0:
            out.append(head + (rest // coeffs[-1],))
    return out


def tuple_gcd(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def coprime_reps(n, coeffs):
    return [x for x in reps(n, coeffs) if tuple_gcd(x) == 1]


def phi(n):
    return sum(1 for m in range(1, n + 1) if gcd(m, n) == 1)


def prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def jacobsthal_window(n):
    """Least m such that every window of m consecutive integers has one coprime to n."""
    period = prod(prime_divisors(n)) or 1
    m = 1
    while True:
        if all(any(gcd(s + i, n) == 1 for i in range(m)) for s in range(period)):
            return m
        m += 1


def shifted_window(primes, shifts):
    period = prod(primes)
    good = [all(k % p != c for p, c in zip(primes, shifts)) for k in range(period)]
    m = 1
    while True:
        if all(any(good[(s + i) % period] for i in range(m)) for s in range(period)):
            return m
        m += 1


def error_term_direct(n, a1, a2):
    return Fraction(len(coprime_reps(n, (a1, a2)))) - Fraction(phi(n), a1 * a2)



def enumerate_counts(limit, a1, a2, rows=64):
    """(g, f) arrays over 0..limit by listing every lattice point a1*x + a2*y <= limit."""
    import numpy as np

    g = np.zeros(limit + 1, dtype=np.int64)
    f = np.zeros(limit + 1, dtype=np.int64)
    x = np.arange(limit // a1 + 1, dtype=np.int64)
    for y0 in range(0, limit // a2 + 1, rows):
        y = np.arange(y0, min(y0 + rows, limit // a2 + 1), dtype=np.int64)[:, None]
        n = a1 * x[None, :] + a2 * y
        keep = n <= limit
        g += np.bincount(n[keep], minlength=limit + 1)
        xs, ys = np.broadcast_to(x, n.shape)[keep], np.broadcast_to(y, n.shape)[keep]
        f += np.bincount(n[keep][np.gcd(xs, ys) == 1], minlength=limit + 1)
    return g, f
