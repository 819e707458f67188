"""
Error Types
===========

Exception hierarchy shared by every chargebasis module. All errors derive
from ``ValueError`` so that callers handling bad input generically keep
working.
"""

from typing import Optional


class ChargeBasisError(ValueError):
    """Base class for invalid input to a chargebasis operation."""


class InvalidPartitionError(ChargeBasisError):
    """A partition or composition is malformed or has the wrong size."""


class InvalidTableauError(ChargeBasisError):
    """A tableau or skew filling violates its shape or ordering rules."""


class InvalidPermutationError(ChargeBasisError):
    """A sequence is not a permutation, or violates an operation precondition."""


class InvalidWordError(ChargeBasisError):
    """A word is not a cocharge word or has the wrong content."""


class NonterminationError(ChargeBasisError):
    """Catabolism insertion exceeded its step bound."""

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps


class ChainConditionError(ChargeBasisError):
    """A chains-algorithm state violates one of its six conditions."""

    def __init__(self, condition: int, message: str, step: Optional[int] = None):
        super().__init__(f"condition ({condition}) violated: {message}")
        self.condition = condition
        self.detail = message
        self.step = step


class ConfigurationError(ChargeBasisError):
    """Run configuration is out of bounds or malformed."""
