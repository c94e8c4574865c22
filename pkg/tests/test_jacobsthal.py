import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coprime_frobenius.arith import factorize, omega, primorial, radical
from coprime_frobenius.config import Budget
from coprime_frobenius.coprime import zeros_in_range
from coprime_frobenius.errors import BudgetExceeded, DomainError
from coprime_frobenius.jacobsthal import (
    ShiftConstraintSet,
    certified_cutoff,
    jacobsthal,
    jacobsthal_covering,
    jacobsthal_general,
)
from coprime_frobenius.denumerant import CoprimePair

from brute import jacobsthal_window, shifted_window
from conftest import coprime_pairs


@pytest.mark.parametrize("n, j", [(1, 1), (2, 2), (30, 6)])
def test_jacobsthal_examples(n, j):
    assert jacobsthal(n) == j == jacobsthal_covering(n)


@pytest.mark.parametrize("primes, shifts, j", [((2, 3), (0, 1), 4), ((2, 3), (0, 0), 4), ((5,), (3,), 2)])
def test_general_examples(primes, shifts, j):
    assert jacobsthal_general(ShiftConstraintSet(primes, shifts)) == j == shifted_window(primes, shifts)


def test_against_window_brute_force():
    for n in list(range(1, 80)) + [210, 2310]:
        assert jacobsthal(n) == jacobsthal_window(n)


def test_period_scan_matches_covering_search():
    for n in range(1, 5000):
        assert jacobsthal(n) == jacobsthal_covering(n), n
    for n in (30030, 510510, 9699690):
        assert jacobsthal(n) == jacobsthal_covering(n)


def test_known_primorial_values():
    # j(primorial(k)) for k = 1..7: 2, 4, 6, 10, 14, 22, 26
    assert [jacobsthal_covering(primorial(k)) for k in range(1, 8)] == [2, 4, 6, 10, 14, 22, 26]


def test_radical_invariance():
    for n in range(1, 10**4 + 1):
        assert jacobsthal(n) == jacobsthal(radical(n))


def test_kanold_envelope():
    for n in range(1, 10**5 + 1):
        assert jacobsthal_covering(n) <= 2 ** omega(n)


def test_shift_never_exceeds_classical():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 10**5)
        primes = factorize(n).primes
        cs = ShiftConstraintSet(primes, tuple(rng.randrange(p) for p in primes))
        assert jacobsthal_general(cs) <= jacobsthal(n)


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), min_size=1, max_size=4, unique=True), st.data())
def test_general_matches_brute(primes, data):
    shifts = tuple(data.draw(st.integers(0, p - 1)) for p in primes)
    assert jacobsthal_general(ShiftConstraintSet(tuple(primes), shifts)) == shifted_window(primes, shifts)


def test_validation_and_budget():
    with pytest.raises(DomainError):
        ShiftConstraintSet((4,), (1,))
    with pytest.raises(DomainError):
        ShiftConstraintSet((5,), (5,))
    with pytest.raises(DomainError):
        ShiftConstraintSet((5, 5), (1, 2))
    with pytest.raises(BudgetExceeded):
        jacobsthal(9699690, budget=Budget(radical_max=10**6))


def _cutoff_brute(pair):
    P = pair.product
    qualifying = [k for k in range(40) if primorial(k) <= P * (2**k + 1)]
    return max(P * (2**k + 1) for k in qualifying)


def test_cutoff_values():
    # (2,3): primorials 1,2,6,30 fit under 6*(2**k+1); 210 > 102
    assert certified_cutoff(CoprimePair(2, 3)) == 54
    assert certified_cutoff(CoprimePair(3, 5)) == _cutoff_brute(CoprimePair(3, 5)) == 255
    for pair in coprime_pairs(50):
        U = certified_cutoff(pair)
        assert U == _cutoff_brute(pair)
        assert U >= 2 * pair.product


def test_cutoff_soundness():
    rng = random.Random(7)
    for pair in rng.sample(coprime_pairs(120), 20):
        U = certified_cutoff(pair)
        assert len(zeros_in_range(pair.a1, pair.a2, U + 1, U + 10 * pair.product + 1)) == 0
