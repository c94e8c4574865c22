"""Resource budgets.

Every expensive operation takes an optional ``budget`` argument; when it is
omitted the process-wide default from :func:`default_budget` applies. Setting
``COPRIME_FROBENIUS_BUDGET`` to an integer overrides all of the n-range limits
at once (the radical and tuple limits are left alone).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_VAR = "COPRIME_FROBENIUS_BUDGET"


@dataclass(frozen=True)
class Budget:
    # largest certified cutoff the G search will scan up to
    cutoff_ceiling: int = 10**9
    # search horizon for the k >= 3 heuristic G search
    k_horizon: int = 2 * 10**6
    # largest N accepted by the mean-value experiments
    meanvalue_max: int = 10**6
    # smallest-prime-factor sieve bound used by factorize()
    sieve_bound: int = 10**7
    # largest period (product of primes) scanned for Jacobsthal functions
    radical_max: int = 3 * 10**7
    # largest estimated tuple count the brute-force oracle will enumerate
    oracle_tuples: int = 10**8


def default_budget() -> Budget:
    raw = os.environ.get(ENV_VAR)
    budget = Budget()
    if raw is None or not raw.strip():
        return budget
    try:
        limit = int(raw.replace("_", ""))
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if limit < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {limit}")
    return replace(budget, cutoff_ceiling=limit, k_horizon=limit, meanvalue_max=limit)
