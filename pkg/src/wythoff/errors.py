"""Exception types shared across the package."""


class WythoffError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(WythoffError, ValueError):
    """A position, vector, or candidate set has the wrong dimension."""


class IllegalMoveError(WythoffError, ValueError):
    """A move would drive some heap negative or is otherwise not legal."""


class OracleDomainError(WythoffError, ValueError):
    """The constant-time oracle is only defined for odd dimension n >= 3."""


class BudgetExceededError(WythoffError, RuntimeError):
    """A requested computation would exceed the configured size budget."""
