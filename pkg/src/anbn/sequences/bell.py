"""Bell numbers via the Bell triangle."""

from __future__ import annotations

import threading

from anbn.errors import CapacityError, PreconditionError

DEFAULT_BELL_CAPACITY = 3_000

_lock = threading.Lock()
_bells: list[int] = [1]
_last_row: list[int] = [1]


def bell(n: int, capacity: int = DEFAULT_BELL_CAPACITY) -> int:
    """Number of set partitions of an ``n``-element set (``bell(0) == 1``)."""
    global _last_row
    if n < 0:
        raise PreconditionError(f"index must be >= 0, got {n}")
    if n > capacity:
        raise CapacityError(f"index {n} exceeds Bell capacity {capacity}")
    with _lock:
        while len(_bells) <= n:
            row = [_last_row[-1]]
            for value in _last_row:
                row.append(row[-1] + value)
            _last_row = row
            _bells.append(row[0])
        return _bells[n]
