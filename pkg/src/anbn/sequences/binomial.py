"""Central binomial coefficients and Catalan numbers."""

from __future__ import annotations

from collections.abc import Iterator
from math import comb

from anbn.errors import CapacityError, PreconditionError

DEFAULT_BINOMIAL_CAPACITY = 200_000


def _check_index(n: int, capacity: int) -> None:
    if n < 1:
        raise PreconditionError(f"index must be >= 1, got {n}")
    if n > capacity:
        raise CapacityError(f"index {n} exceeds binomial capacity {capacity}")


def central_binomial(n: int, capacity: int = DEFAULT_BINOMIAL_CAPACITY) -> int:
    """``C(2n, n)``."""
    _check_index(n, capacity)
    return comb(2 * n, n)


def catalan(n: int, capacity: int = DEFAULT_BINOMIAL_CAPACITY) -> int:
    """``C(2n, n) / (n + 1)``, an exact division."""
    return central_binomial(n, capacity) // (n + 1)


def iter_central_binomials(
    count: int, capacity: int = DEFAULT_BINOMIAL_CAPACITY
) -> Iterator[tuple[int, int]]:
    """Yield ``(n, C(2n, n))`` for ``n = 1..count`` by exact ratio updates."""
    if count > capacity:
        raise CapacityError(f"index {count} exceeds binomial capacity {capacity}")
    value = 1
    for n in range(1, count + 1):
        value = value * 2 * (2 * n - 1) // n
        yield n, value


def iter_catalans(
    count: int, capacity: int = DEFAULT_BINOMIAL_CAPACITY
) -> Iterator[tuple[int, int]]:
    """Yield ``(n, C_n)`` for ``n = 1..count``."""
    for n, value in iter_central_binomials(count, capacity):
        yield n, value // (n + 1)
