"""Data models for integer sequences and partition tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any


class SequenceKind(StrEnum):
    """Sequences whose residues the coverage engine inspects."""

    EXP_LINEAR = "explinear"
    PRIME_MINUS_N = "prime-minus-n"
    N_TIMES_PRIME = "n-times-prime"
    CENTRAL_BINOM_PLUS_N = "binom-plus-n"
    CENTRAL_BINOM_MINUS_N = "binom-minus-n"
    CATALAN_PLUS_N = "catalan-plus-n"
    CATALAN_MINUS_N = "catalan-minus-n"


class PartitionKind(StrEnum):
    UNRESTRICTED = "p"
    STRICT = "q"


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence indexed from ``n = 1``.

    ``EXP_LINEAR`` is ``a**n + b*n`` and is the only kind with parameters.
    """

    kind: SequenceKind
    a: int | None = None
    b: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SequenceKind(self.kind))
        if self.kind is SequenceKind.EXP_LINEAR:
            if self.a is None or self.b is None:
                raise ValueError("explinear sequences need both a and b")
        elif self.a is not None or self.b is not None:
            raise ValueError(f"{self.kind.value} takes no parameters")

    @classmethod
    def exp_linear(cls, a: int, b: int) -> SequenceSpec:
        return cls(SequenceKind.EXP_LINEAR, a=a, b=b)

    @classmethod
    def parse(cls, name: str, a: int | None = None, b: int | None = None) -> SequenceSpec:
        """Build a spec from its CLI name, e.g. ``"explinear"`` or ``"n-times-prime"``."""
        try:
            kind = SequenceKind(name.lower())
        except ValueError as exc:
            choices = [k.value for k in SequenceKind]
            raise ValueError(f"Unknown sequence '{name}'. Available: {choices}") from exc
        if kind is SequenceKind.EXP_LINEAR:
            return cls(kind, a=a, b=b)
        return cls(kind)

    @property
    def label(self) -> str:
        """Human-readable term formula."""
        if self.kind is SequenceKind.EXP_LINEAR:
            return f"{self.a}^n{self.b:+d}n"
        return {
            SequenceKind.PRIME_MINUS_N: "p_n-n",
            SequenceKind.N_TIMES_PRIME: "n*p_n",
            SequenceKind.CENTRAL_BINOM_PLUS_N: "C(2n,n)+n",
            SequenceKind.CENTRAL_BINOM_MINUS_N: "C(2n,n)-n",
            SequenceKind.CATALAN_PLUS_N: "Cat_n+n",
            SequenceKind.CATALAN_MINUS_N: "Cat_n-n",
        }[self.kind]

    def params(self) -> dict[str, int]:
        if self.kind is SequenceKind.EXP_LINEAR:
            return {"a": self.a, "b": self.b}
        return {}

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, **self.params()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SequenceSpec:
        return cls(SequenceKind(data["kind"]), a=data.get("a"), b=data.get("b"))


@dataclass
class PartitionTable:
    """Exact values ``p(0..N)`` or ``q(0..N)``.

    Attributes:
        kind: Unrestricted (``p``) or distinct parts (``q``).
        values: ``values[n]`` is the partition count of ``n``; ``values[0] == 1``.
    """

    kind: PartitionKind
    values: list[int] = field(default_factory=lambda: [1])

    @property
    def size(self) -> int:
        """Largest index held (the table's N)."""
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]
