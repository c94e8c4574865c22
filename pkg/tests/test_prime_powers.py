import pytest

from coprime_frobenius.denumerant import CoprimePair, count_reps, sylvester_frobenius
from coprime_frobenius.errors import DomainError
from coprime_frobenius.prime_powers import (
    count_prime_power_reps,
    iroot,
    scan_zero_pairs,
    verify_zero_families,
    zero_family_failures,
)

from brute import reps

FORTY = [(40, 71), (40, 239), (40, 391), (40, 431), (40, 751), (40, 791)]


def test_examples():
    assert count_prime_power_reps(2, CoprimePair(6, 11)).count == 0
    assert count_prime_power_reps(2, CoprimePair(40, 71)).count == 0
    res = count_prime_power_reps(2, CoprimePair(5, 8))
    assert res.count == 1 and res.witnesses == (5,)


def test_counts_against_enumeration():
    for a1, a2 in [(3, 7), (5, 8), (7, 11), (9, 20), (13, 14)]:
        pair = CoprimePair(a1, a2)
        g = sylvester_frobenius(pair)
        for k in (1, 2, 3):
            want = [p for p in range(2, g + 1) if all(p % q for q in range(2, p))
                    and p**k <= g and reps(p**k, (a1, a2))]
            assert list(count_prime_power_reps(k, pair).witnesses) == want


def test_witnesses_recheck():
    for pair in [CoprimePair(11, 30), CoprimePair(17, 41), CoprimePair(50, 77)]:
        for k in (1, 2, 3):
            res = count_prime_power_reps(k, pair)
            for p in res.witnesses:
                assert p**k <= sylvester_frobenius(pair)
                assert count_reps(p**k, pair) > 0


def test_iroot():
    for n in range(0, 3000):
        for k in (1, 2, 3, 5):
            r = iroot(n, k)
            assert r**k <= n < (r + 1) ** k
    assert iroot(10**36, 2) == 10**18


@pytest.mark.parametrize("g_max", [0, 10, 50])
def test_zero_families(g_max):
    assert verify_zero_families(g_max)
    assert zero_family_failures(g_max) == []


def test_zero_scan_families_in_range():
    found = {(p.a1, p.a2) for p in scan_zero_pairs(2, 24, 50)}
    assert {(6, 11), (8, 15), (12, 23), (24, 47)} <= found
    pairs = scan_zero_pairs(2, 24, 50)
    assert pairs == sorted(pairs, key=lambda p: (p.a1, p.a2))


def test_zero_scan_forty():
    found = [(p.a1, p.a2) for p in scan_zero_pairs(2, 41, 800) if p.a1 == 40]
    assert found == FORTY


def test_zero_scan_primes():
    assert [(p.a1, p.a2) for p in scan_zero_pairs(1, 3, 10)] == [(2, 3)]
    assert [(p.a1, p.a2) for p in scan_zero_pairs(1, 59, 60)] == [(2, 3)]


def test_scan_bounds():
    with pytest.raises(DomainError):
        scan_zero_pairs(2, 2, 10)
