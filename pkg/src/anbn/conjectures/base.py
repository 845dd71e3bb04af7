"""Abstract base class for conjecture checkers."""

from __future__ import annotations

import json
import logging
import random
import time
from abc import ABC, abstractmethod
from typing import Any, ClassVar

from anbn.arith.primes import is_probabilistic
from anbn.conjectures.schemas import (
    CheckerOptions,
    ConjectureRecord,
    RecordStatus,
    SearchOutcome,
    worst_status,
)
from anbn.errors import PreconditionError
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)


class ConjectureChecker(ABC):
    """Checks one conjecture instance at a time.

    Subclasses set ``conjecture_id`` and ``threshold`` (least valid parameter)
    and implement ``evaluate`` and ``replay``.
    """

    conjecture_id: ClassVar[str]
    threshold: ClassVar[int] = 1
    parameter_name: ClassVar[str] = "n"
    default_span: ClassVar[int] = 1000

    def __init__(self, options: CheckerOptions | None = None):
        self.options = options or CheckerOptions()

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def check(self, parameter: int) -> ConjectureRecord:
        """Check the instance ``parameter`` and time it."""
        if parameter < self.threshold:
            raise PreconditionError(
                f"{self.conjecture_id} applies to {self.parameter_name} >= {self.threshold}, "
                f"got {parameter}"
            )
        start = time.perf_counter()
        witness, status, prp_rounds = self.evaluate(parameter, self.rng_for(parameter))
        elapsed_ms = (time.perf_counter() - start) * 1000

        if status is not RecordStatus.VERIFIED:
            logger.warning("%s at %s=%d: %s", self.conjecture_id, self.parameter_name,
                           parameter, status.value)
        return ConjectureRecord(
            conjecture_id=self.conjecture_id,
            parameter=parameter,
            witness=witness,
            status=status,
            elapsed_ms=elapsed_ms,
            prp_rounds=prp_rounds,
        )

    @abstractmethod
    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        """Return ``(witness, status, prp_rounds)`` for one instance."""

    @abstractmethod
    def replay(self, record: ConjectureRecord) -> Verdict:
        """Re-evaluate a verified record's witness by an independent path."""

    def recheck(self, record: ConjectureRecord) -> Verdict:
        """Re-run the search and compare status and witness (non-verified records)."""
        fresh = self.check(record.parameter)
        if fresh.status != record.status:
            return Verdict(False, f"status {record.status.value} but re-run gives "
                                  f"{fresh.status.value}")
        if json.dumps(fresh.witness, sort_keys=True) != json.dumps(record.witness, sort_keys=True):
            return Verdict(False, "re-run produced a different witness")
        return Verdict(True)

    def default_range(self) -> tuple[int, int]:
        return self.threshold, self.threshold + self.default_span - 1

    def rng_for(self, parameter: int) -> random.Random:
        """Per-instance generator derived from the run seed, independent of chunking."""
        return random.Random(f"{self.options.seed}:{self.conjecture_id}:{parameter}")

    def rounds_for(self, value: int) -> int:
        """PRP rounds behind a primality claim about ``value``."""
        return self.options.prp_rounds if is_probabilistic(value) else 0

    @classmethod
    def checker_name(cls) -> str:
        """Return human-readable checker name."""
        return cls.__name__


def combine_outcomes(
    outcomes: dict[str, SearchOutcome],
) -> tuple[dict[str, Any], RecordStatus, int]:
    """Fold per-clause outcomes into one record payload."""
    witness = {clause: outcome.payload() for clause, outcome in outcomes.items()}
    statuses = {clause: outcome.status.value for clause, outcome in outcomes.items()}
    witness["clause_status"] = statuses
    status = worst_status([o.status for o in outcomes.values()])
    rounds = max((o.prp_rounds for o in outcomes.values()), default=0)
    return witness, status, rounds
