"""Data models for range runs, checkpoints and report headers."""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from anbn.conjectures.schemas import ConjectureRecord, RecordStatus


class RunConfig(BaseModel):
    """One CLI invocation, validated before any work starts."""

    command: Literal["witness", "cover", "conjecture", "seq"]
    conjecture_id: str | None = None
    range_from: int = 1
    range_to: int = 1
    long_mode: bool = False
    prp_rounds: int = Field(default=32, ge=1)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=64, ge=1)
    output_path: Path | None = None
    checkpoint_path: Path | None = None
    format: Literal["jsonl", "csv"] = "jsonl"

    @model_validator(mode="after")
    def _check_range(self) -> RunConfig:
        if self.range_from > self.range_to:
            raise ValueError(f"malformed range: from {self.range_from} > to {self.range_to}")
        if self.command == "conjecture" and not self.conjecture_id:
            raise ValueError("conjecture runs need a conjecture id")
        return self


@dataclass
class Checkpoint:
    """Last parameter whose record is safely on disk."""

    conjecture_id: str
    last_completed_parameter: int
    config_digest: str

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Checkpoint:
        return cls(
            conjecture_id=str(data["conjecture_id"]),
            last_completed_parameter=int(data["last_completed_parameter"]),
            config_digest=str(data["config_digest"]),
        )


@dataclass
class ReportHeader:
    """First line of a JSON-lines report, stored as ``{"header": {...}}``."""

    tool: str
    version: str
    seed: int
    config_digest: str
    timestamp: str
    prp_rounds: int
    conjecture_id: str
    options: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReportHeader:
        return cls(**data)


@dataclass
class RunSummary:
    """Counts after a range run; ``exit_code`` follows the CLI contract."""

    conjecture_id: str
    range_from: int
    range_to: int
    last_parameter: int | None = None
    counts: Counter[str] = field(default_factory=Counter)
    aborted: bool = False
    resumed_from: int | None = None

    def add(self, record: ConjectureRecord) -> None:
        self.counts[record.status.value] += 1
        self.last_parameter = record.parameter

    def restore(self, statuses: list[str], last_parameter: int) -> None:
        """Count the records a resumed run keeps from its earlier attempt."""
        self.counts.update(statuses)
        if statuses:
            self.last_parameter = last_parameter

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def exit_code(self) -> int:
        return 2 if self.counts[RecordStatus.COUNTEREXAMPLE.value] else 0


@dataclass
class ReportVerification:
    """Outcome of replaying a whole report."""

    total: int = 0
    passed: int = 0
    failures: list[tuple[ConjectureRecord, str]] = field(default_factory=list)
    digest_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.digest_ok and self.passed == self.total
