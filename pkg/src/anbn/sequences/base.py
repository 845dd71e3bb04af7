"""Abstract base class for integer sequences indexed from n = 1."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator

from anbn.errors import PreconditionError


class IntegerSequence(ABC):
    """Interface for sequences consumed by the coverage engine and scans."""

    @abstractmethod
    def term(self, n: int) -> int:
        """Exact value of the ``n``-th term (``n >= 1``)."""

    def term_mod(self, n: int, m: int) -> int:
        """The ``n``-th term reduced into ``[0, m)``."""
        if m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {m}")
        return self.term(n) % m

    def iter_terms(self, count: int) -> Iterator[int]:
        """Exact terms ``1..count``."""
        for n in range(1, count + 1):
            yield self.term(n)

    def iter_mod(self, m: int, count: int) -> Iterator[int]:
        """Terms ``1..count`` reduced mod ``m``.

        Subclasses with a modular recurrence override this so the exact values
        are never built.
        """
        if m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {m}")
        for value in self.iter_terms(count):
            yield value % m

    @staticmethod
    def _check_index(n: int) -> None:
        if n < 1:
            raise PreconditionError(f"sequence index must be >= 1, got {n}")

    @classmethod
    def sequence_name(cls) -> str:
        """Return human-readable sequence name."""
        return cls.__name__
