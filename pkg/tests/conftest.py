import math
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from coprime_frobenius import CoprimePair  # noqa: E402

# sieve builds and numpy warm-up make first calls slow
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def coprime_pairs(a2_max, a1_min=2):
    return [
        CoprimePair(a1, a2)
        for a2 in range(3, a2_max + 1)
        for a1 in range(a1_min, a2)
        if math.gcd(a1, a2) == 1
    ]


@pytest.fixture(scope="session")
def small_pairs():
    return coprime_pairs(30)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
