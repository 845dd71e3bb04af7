"""Hardy–Ramanujan leading-order estimates for p(n) and q(n).

Floating point only; used for sanity ratios, never inside exact logic.
"""

from __future__ import annotations

import math

from anbn.errors import PreconditionError
from anbn.sequences.partitions import partition_p, strict_partition_q
from anbn.sequences.schemas import PartitionKind


def log_estimate(n: int, kind: PartitionKind | str) -> float:
    """Natural log of the leading-order estimate."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if PartitionKind(kind) is PartitionKind.UNRESTRICTED:
        return math.pi * math.sqrt(2 * n / 3) - math.log(4 * math.sqrt(3) * n)
    return math.pi * math.sqrt(n / 3) - math.log(4) - 0.25 * math.log(3 * n**3)


def hardy_ramanujan_estimate(n: int, kind: PartitionKind | str) -> float:
    """``e^{π√(2n/3)} / (4√3 n)`` for ``p``; ``e^{π√(n/3)} / (4(3n³)^{1/4})`` for ``q``."""
    try:
        return math.exp(log_estimate(n, kind))
    except OverflowError:
        return math.inf


def hardy_ramanujan_ratio(n: int, kind: PartitionKind | str, capacity: int | None = None) -> float:
    """Estimate divided by the exact value, computed in log space."""
    kind = PartitionKind(kind)
    exact_fn = partition_p if kind is PartitionKind.UNRESTRICTED else strict_partition_q
    exact = exact_fn(n) if capacity is None else exact_fn(n, capacity)
    return math.exp(log_estimate(n, kind) - math.log(exact))
