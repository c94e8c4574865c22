import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprime_frobenius.arith import (
    CongruenceSystem,
    crt_solve,
    euler_phi,
    factorize,
    gcd_all,
    is_prime,
    mobius,
    mobius_table,
    omega,
    omega_table,
    phi_table,
    primes_up_to,
    primorial,
    spf_table,
)
from coprime_frobenius.errors import DomainError

from brute import phi as brute_phi


@pytest.mark.parametrize("n, factors", [(1, ()), (12, ((2, 2), (3, 1))), (89, ((89, 1),))])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_rejects_zero():
    with pytest.raises(DomainError):
        factorize(0)


@pytest.mark.parametrize("f, n, want", [
    (mobius, 1, 1), (mobius, 6, 1), (mobius, 4, 0),
    (euler_phi, 1, 1), (euler_phi, 8, 4), (euler_phi, 15, 8),
    (omega, 1, 0), (omega, 12, 2), (omega, 30, 3),
])
def test_multiplicative_examples(f, n, want):
    assert f(n) == want


def test_factorization_reconstructs_up_to_a_million():
    limit = 10**6
    spf = spf_table(limit)
    n = np.arange(2, limit + 1)
    # peel the smallest prime factor repeatedly; every n must reach 1
    rest = n.copy()
    steps = 0
    while (rest > 1).any():
        p = spf[rest]
        rest = np.where(rest > 1, rest // np.maximum(p, 1), 1)
        steps += 1
    assert steps <= 20
    for n in random.Random(3).sample(range(1, limit + 1), 2000):
        fac = factorize(n)
        assert math.prod(p**e for p, e in fac.factors) == n
        assert all(is_prime(p) for p in fac.primes)


def test_spf_entries_are_prime_divisors():
    spf = spf_table(10**5)
    n = np.arange(2, 10**5 + 1)
    assert (n % spf[2:] == 0).all()
    assert all(is_prime(int(p)) for p in np.unique(spf[2:]))


@pytest.mark.parametrize("n", [2**61 - 1, 600851475143, (2**31 - 1) * (2**31 + 11), 2**62, 999999999999999989 * 9])
def test_factorize_beyond_sieve(n):
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac.factors) == n
    assert all(is_prime(p) for p in fac.primes)


def test_tables_match_scalars():
    N = 3000
    phi, om, mu = phi_table(N), omega_table(N), mobius_table(N)
    for n in range(1, N + 1):
        assert phi[n] == euler_phi(n)
        assert om[n] == omega(n)
        assert mu[n] == mobius(n)


def test_phi_against_counting():
    for n in range(1, 400):
        assert euler_phi(n) == brute_phi(n)


@settings(max_examples=300)
@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_multiplicativity(m, n):
    if math.gcd(m, n) != 1:
        return
    assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)
    assert mobius(m * n) == mobius(m) * mobius(n)
    assert omega(m * n) == omega(m) + omega(n)


def test_mobius_sum_over_divisors():
    mu = mobius_table(10**4)
    acc = np.zeros(10**4 + 1, dtype=np.int64)
    for d in range(1, 10**4 + 1):
        acc[d::d] += mu[d]
    assert acc[1] == 1
    assert (acc[2:] == 0).all()


def test_primes_and_primorial():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [primorial(k) for k in range(7)] == [1, 2, 6, 30, 210, 2310, 30030]
    assert [p for p in range(100) if is_prime(p)] == list(primes_up_to(99))


@pytest.mark.parametrize("system, want", [
    (((2, 1), (3, 2)), (5, 6)),
    (((2, 1), (3, 2), (5, 4), (11, 1), (17, 4)), (89, 5610)),
])
def test_crt_examples(system, want):
    assert crt_solve(CongruenceSystem(system)) == want


def test_crt_rejects_common_factor():
    with pytest.raises(DomainError, match="moduli not pairwise coprime"):
        crt_solve(CongruenceSystem(((4, 1), (6, 3))))


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]), min_size=1, unique=True),
       st.data())
def test_crt_solution_satisfies_constraints(moduli, data):
    residues = [data.draw(st.integers(0, m - 1)) for m in moduli]
    system = CongruenceSystem(tuple(zip(moduli, residues)))
    x, M = crt_solve(system)
    assert M == math.prod(moduli)
    assert 0 <= x < M
    assert system.satisfied_by(x)


@pytest.mark.parametrize("values, want", [([0, 1], 1), ([4, 6], 2), ([5, 0, 0], 5)])
def test_gcd_all(values, want):
    assert gcd_all(values) == want


def test_gcd_all_rejects_zero_tuple():
    with pytest.raises(DomainError):
        gcd_all([0, 0])
