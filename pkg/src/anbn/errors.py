"""Exception hierarchy shared by every anbn module.

Each error is also a ``ValueError`` so callers that only know the builtin
keep working.
"""

from __future__ import annotations


class AnbnError(Exception):
    """Base class for all anbn errors."""


class PreconditionError(AnbnError, ValueError):
    """An operation was called outside its stated domain."""


class CapacityError(AnbnError, ValueError):
    """A table, sieve or scan would exceed its configured capacity."""


class TooLargeToFactorError(CapacityError):
    """Integer exceeds the trial-division factorization bound."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"{n} is too large to factor (bound {bound})")
        self.n = n
        self.bound = bound


class NotInvertibleError(AnbnError, ValueError):
    """Modular inverse requested for a non-unit."""

    def __init__(self, a: int, modulus: int):
        super().__init__(f"{a} is not invertible modulo {modulus}")
        self.a = a
        self.modulus = modulus


class UnknownConjectureError(AnbnError, ValueError):
    """Conjecture id not present in the checker registry."""


class CheckpointMismatchError(AnbnError, ValueError):
    """Resume refused: the checkpoint was written under a different configuration."""


class ReportFormatError(AnbnError, ValueError):
    """A report line could not be parsed."""
