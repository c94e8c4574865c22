"""Coprime-restricted Frobenius problem: counts, error terms, certified G search.

Representations ``n = a1*x1 + ... + ak*xk`` with ``xi >= 0`` and
``gcd(x1, ..., xk) = 1``; ``G`` is the largest ``n`` with none.
"""

__version__ = "0.1.0"

from .denumerant import Basis, CoprimePair, count_reps, count_reps_k, solutions, sylvester_frobenius  # noqa: E402
from .coprime import (  # noqa: E402
    GResult,
    coprime_frobenius,
    coprime_frobenius_k,
    count_coprime_reps,
    count_coprime_reps_oracle,
    error_term,
    gap_report,
)
from .errors import BudgetExceeded, DomainError  # noqa: E402

__all__ = [
    "Basis",
    "BudgetExceeded",
    "CoprimePair",
    "DomainError",
    "GResult",
    "coprime_frobenius",
    "coprime_frobenius_k",
    "count_coprime_reps",
    "count_coprime_reps_oracle",
    "count_reps",
    "count_reps_k",
    "error_term",
    "gap_report",
    "solutions",
    "sylvester_frobenius",
]
