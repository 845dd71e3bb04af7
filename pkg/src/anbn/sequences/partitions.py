"""Partition functions p(n) and q(n) over exact integers.

p(n) follows Euler's pentagonal-number recurrence. q(n) uses the same
pentagonal numbers through the identity Q(x)·E(x) = E(x²), where
Q(x) = ∏(1 + x^k) and E(x) = ∏(1 - x^k) = Σ (-1)^j x^{j(3j-1)/2}.
Both fills are O(N^1.5); the distinct-parts dynamic program is kept as an
independent check.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Iterator

from anbn.errors import CapacityError, PreconditionError
from anbn.sequences.schemas import PartitionKind, PartitionTable

logger = logging.getLogger(__name__)

DEFAULT_PARTITION_CAPACITY = 20_000


def _pentagonal_terms(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(g, sign)`` for generalized pentagonal ``0 < g <= n``, sign ``(-1)**(k+1)``."""
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            return
        sign = 1 if k % 2 else -1
        yield g1, sign
        g2 = g1 + k
        if g2 <= n:
            yield g2, sign
        k += 1


def _double_pentagonal_sign(n: int) -> int:
    """Coefficient of ``x**n`` in E(x²)."""
    if n == 0:
        return 1
    if n % 2:
        return 0
    for g, sign in _pentagonal_terms(n // 2):
        if g == n // 2:
            return -sign
    return 0


def _next_value(values: list[int], kind: PartitionKind) -> int:
    n = len(values)
    total = 0
    for g, sign in _pentagonal_terms(n):
        total += sign * values[n - g]
    if kind is PartitionKind.STRICT:
        total += _double_pentagonal_sign(n)
    return total


def recurrence_holds(table: PartitionTable, n: int) -> bool:
    """Re-check the defining recurrence of ``table`` at index ``n``."""
    if n == 0:
        return table[0] == 1
    return table[n] == _next_value(table.values[:n], table.kind)


def extend_table(table: PartitionTable, size: int) -> None:
    """Fill ``table`` in place up to index ``size``."""
    values = table.values
    while len(values) <= size:
        values.append(_next_value(values, table.kind))


def strict_partitions_by_parts(size: int) -> list[int]:
    """q(0..size) from the product of (1 + x^k), k <= size, truncated at ``size``."""
    counts = [1] + [0] * size
    for part in range(1, size + 1):
        for total in range(size, part - 1, -1):
            counts[total] += counts[total - part]
    return counts


def partitions_by_parts(size: int) -> list[int]:
    """p(0..size) from the product of 1/(1 - x^k), truncated at ``size``."""
    counts = [1] + [0] * size
    for part in range(1, size + 1):
        for total in range(part, size + 1):
            counts[total] += counts[total - part]
    return counts


# ---------------------------------------------------------------------------
# Shared tables
# ---------------------------------------------------------------------------

_lock = threading.Lock()
_tables: dict[PartitionKind, PartitionTable] = {}


def get_partition_table(
    kind: PartitionKind,
    size: int,
    capacity: int = DEFAULT_PARTITION_CAPACITY,
) -> PartitionTable:
    """Return the shared table of ``kind`` covering at least ``0..size``."""
    kind = PartitionKind(kind)
    if size < 0:
        raise PreconditionError(f"partition index must be >= 0, got {size}")
    if size > capacity:
        raise CapacityError(f"partition index {size} exceeds capacity {capacity}")
    with _lock:
        table = _tables.setdefault(kind, PartitionTable(kind=kind))
        if table.size < size:
            target = min(capacity, max(size, 2 * table.size))
            extend_table(table, target)
            logger.info("Partition table %s filled to N=%d", kind.value, target)
        return table


def partition_p(n: int, capacity: int = DEFAULT_PARTITION_CAPACITY) -> int:
    """Number of partitions of ``n`` (``p(0) == 1``)."""
    return get_partition_table(PartitionKind.UNRESTRICTED, n, capacity)[n]


def strict_partition_q(n: int, capacity: int = DEFAULT_PARTITION_CAPACITY) -> int:
    """Number of partitions of ``n`` into distinct parts (``q(0) == 1``)."""
    return get_partition_table(PartitionKind.STRICT, n, capacity)[n]
