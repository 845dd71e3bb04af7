"""Data models for conjecture checking."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any, Literal

from anbn.errors import PreconditionError

if TYPE_CHECKING:
    from anbn.config import Settings


class RecordStatus(StrEnum):
    """Outcome of checking one conjecture instance.

    ``counterexample`` is reserved for exhausting the conjecture's own search
    space; ``exhausted_cap`` means an external scan limit was hit and
    ``indeterminate`` an instance unresolved by design or by PRP budget.
    """

    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    EXHAUSTED_CAP = "exhausted_cap"
    INDETERMINATE = "indeterminate"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]


_SEVERITY = {
    RecordStatus.VERIFIED: 0,
    RecordStatus.EXHAUSTED_CAP: 1,
    RecordStatus.INDETERMINATE: 2,
    RecordStatus.COUNTEREXAMPLE: 3,
}


def worst_status(statuses: list[RecordStatus]) -> RecordStatus:
    """Combine clause outcomes: any counterexample wins, all-verified stays verified."""
    return max(statuses, key=lambda s: s.severity, default=RecordStatus.VERIFIED)


@dataclass
class ConjectureRecord:
    """One checked instance of a conjecture.

    Attributes:
        conjecture_id: Registry id, e.g. ``"1.3i"``.
        parameter: The instance (``n`` or ``m`` depending on the conjecture).
        witness: JSON-compatible payload: found k, tuples, coverage indices.
        status: See ``RecordStatus``.
        elapsed_ms: Wall time of the check.
        prp_rounds: Random rounds behind the witness's primality, 0 when exact.
    """

    conjecture_id: str
    parameter: int
    witness: dict[str, Any]
    status: RecordStatus
    elapsed_ms: float = 0.0
    prp_rounds: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "conjecture_id": self.conjecture_id,
            "parameter": self.parameter,
            "witness": self.witness,
            "status": self.status.value,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "prp_rounds": self.prp_rounds,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ConjectureRecord:
        return cls(
            conjecture_id=str(data["conjecture_id"]),
            parameter=int(data["parameter"]),
            witness=dict(data["witness"]),
            status=RecordStatus(data["status"]),
            elapsed_ms=float(data.get("elapsed_ms", 0.0)),
            prp_rounds=int(data.get("prp_rounds", 0)),
        )

    def identity(self) -> tuple[str, int, str, str]:
        """Everything except timing, for comparing runs."""
        return (
            self.conjecture_id,
            self.parameter,
            json.dumps(self.witness, sort_keys=True),
            self.status.value,
        )


@dataclass(frozen=True)
class RepresentationSpec:
    """One clause of a representation conjecture.

    Attributes:
        clause_id: e.g. ``"1.3i-first"``.
        predicate: Symbolic form of the representation.
        min_n: Least ``n`` the clause claims (the clause reads ``n > min_n - 1``).
    """

    clause_id: str
    predicate: str
    min_n: int


@dataclass
class CheckerOptions:
    """Everything that changes what a checker computes.

    Hashing ``result_fields()`` gives the run's config digest.
    """

    a: int = 2
    b: int = 1
    sign: Literal["minus", "plus", "both"] = "minus"
    long_mode: bool = False
    prp_rounds: int = 32
    seed: int = 20131205
    desk_max_k: int = 5_000
    totient_reading: Literal["strict", "sum"] = "strict"
    newman_cap: int = 10_000
    c12_exp_max: int = 20
    c12_value_cap: int = 10**30
    factor_bound: int = 10**12
    sieve_capacity: int = 50_000_000
    partition_capacity: int = 20_000
    binomial_capacity: int = 200_000
    bell_capacity: int = 3_000

    def __post_init__(self) -> None:
        if self.sign not in ("minus", "plus", "both"):
            raise PreconditionError(f"sign must be minus, plus or both, got '{self.sign}'")
        if self.totient_reading not in ("strict", "sum"):
            raise PreconditionError(
                f"totient reading must be strict or sum, got '{self.totient_reading}'"
            )
        if self.prp_rounds < 1:
            raise PreconditionError(f"prp_rounds must be >= 1, got {self.prp_rounds}")

    @property
    def max_k(self) -> int | None:
        """Limit for single-variable k searches; ``None`` in long mode."""
        return None if self.long_mode else self.desk_max_k

    def result_fields(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> CheckerOptions:
        h, ar, sq = settings.harness, settings.arith, settings.sequences
        values: dict[str, Any] = {
            "long_mode": h.long_mode,
            "prp_rounds": ar.prp_rounds,
            "seed": h.seed,
            "desk_max_k": h.desk_max_k,
            "totient_reading": h.totient_reading,
            "newman_cap": h.newman_cap,
            "c12_exp_max": h.c12_exp_max,
            "c12_value_cap": h.c12_value_cap,
            "factor_bound": ar.factor_bound,
            "sieve_capacity": ar.sieve_capacity,
            "partition_capacity": sq.partition_capacity,
            "binomial_capacity": sq.binomial_capacity,
            "bell_capacity": sq.bell_capacity,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class SearchOutcome:
    """Result of one clause search before it becomes a record."""

    witness: dict[str, Any] | None
    status: RecordStatus
    prp_rounds: int = 0
    note: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def payload(self) -> dict[str, Any] | None:
        if self.witness is None and not self.note:
            return None
        data = dict(self.witness or {})
        if self.note:
            data["note"] = self.note
        data.update(self.extra)
        return data


@dataclass(frozen=True)
class DiophantineSolution:
    """``x**n + sign*n == y**m`` with ``y`` the least base (largest ``m``)."""

    x: int
    n: int
    y: int
    m: int
    sign: Literal["+", "-"]

    @property
    def offset(self) -> int:
        return self.n if self.sign == "+" else -self.n

    def as_tuple(self) -> tuple[int, int, int, int, str]:
        return (self.x, self.n, self.y, self.m, self.sign)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DiophantineSolution:
        return cls(int(data["x"]), int(data["n"]), int(data["y"]), int(data["m"]), data["sign"])
