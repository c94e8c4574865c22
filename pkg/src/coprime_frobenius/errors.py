"""Exception types shared by the package.

The CLI maps :class:`DomainError` to exit code 1 and :class:`BudgetExceeded`
to exit code 2.
"""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class BudgetExceeded(RuntimeError):
    """A computation would exceed a configured resource budget."""
