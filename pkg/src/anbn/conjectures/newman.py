"""Residues of the strict partition function: least n with q(n) ≡ r (mod m)."""

from __future__ import annotations

import logging
import random
from typing import Any

from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.schemas import ConjectureRecord, RecordStatus
from anbn.errors import PreconditionError
from anbn.sequences.partitions import DEFAULT_PARTITION_CAPACITY, get_partition_table
from anbn.sequences.schemas import PartitionKind
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)


def least_n_per_residue(
    m: int, cap: int, capacity: int = DEFAULT_PARTITION_CAPACITY
) -> dict[int, int]:
    """Least ``n`` in ``[1, cap]`` for each residue of ``q(n)`` mod ``m`` that occurs."""
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")
    if cap < 1:
        raise PreconditionError(f"cap must be >= 1, got {cap}")
    table = get_partition_table(PartitionKind.STRICT, cap, capacity)
    least: dict[int, int] = {}
    for n in range(1, cap + 1):
        least.setdefault(table[n] % m, n)
        if len(least) == m:
            break
    return least


def newman_analogue_least_n(
    m: int, r: int, cap: int, capacity: int = DEFAULT_PARTITION_CAPACITY
) -> int | None:
    """Least ``n <= cap`` with ``q(n) ≡ r (mod m)``, or ``None`` when the cap is hit."""
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")
    if cap < 1:
        raise PreconditionError(f"cap must be >= 1, got {cap}")
    table = get_partition_table(PartitionKind.STRICT, cap, capacity)
    target = r % m
    for n in range(1, cap + 1):
        if table[n] % m == target:
            return n
    return None


class StrictPartitionResidueChecker(ConjectureChecker):
    """Id ``1.7i`` for one modulus: every residue is reached below the cap.

    Reaching a residue once is the finite shadow of "infinitely many n"; a
    residue missing below the cap is ``exhausted_cap``, never a counterexample.
    """

    conjecture_id = "1.7i"
    parameter_name = "m"
    default_span = 42

    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        cap = self.options.newman_cap
        least = least_n_per_residue(parameter, cap, self.options.partition_capacity)
        missing = [r for r in range(parameter) if r not in least]
        witness: dict[str, Any] = {
            "cap": cap,
            "least_n": {str(r): least[r] for r in sorted(least)},
        }
        if missing:
            witness["residues_missing"] = missing
            return witness, RecordStatus.EXHAUSTED_CAP, 0
        return witness, RecordStatus.VERIFIED, 0

    def replay(self, record: ConjectureRecord) -> Verdict:
        m = record.parameter
        least = {int(r): n for r, n in record.witness["least_n"].items()}
        if sorted(least) != list(range(m)):
            return Verdict(False, f"not every residue mod {m} has a witness")
        top = max(least.values())
        table = get_partition_table(PartitionKind.STRICT, top, self.options.partition_capacity)
        first_seen: dict[int, int] = {}
        for n in range(top, 0, -1):
            first_seen[table[n] % m] = n
        for r, n in least.items():
            if first_seen.get(r) != n:
                return Verdict(False, f"least n with q(n) ≡ {r} (mod {m}) is "
                                      f"{first_seen.get(r)}, record says {n}")
        return Verdict(True)
