"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's domain (bad sizes, labels, families)."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would examine more candidates than allowed."""


class ConsistencyError(AssertionError):
    """An internal invariant failed. Indicates a bug, never bad input."""
