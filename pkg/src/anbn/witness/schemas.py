"""Data models for residue witnesses and coverage reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Any

from anbn.errors import PreconditionError
from anbn.sequences.schemas import SequenceSpec


@dataclass(frozen=True)
class Verdict:
    """Outcome of an independent re-check; truthy iff ``ok``."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WitnessQuery:
    """Find ``n`` with ``a**n + b*n ≡ r (mod m)``; requires ``gcd(b, m) == 1``."""

    a: int
    b: int
    m: int
    r: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {self.m}")
        if gcd(self.b, self.m) != 1:
            raise PreconditionError(f"b={self.b} is not coprime to m={self.m}")

    @property
    def target_residue(self) -> int:
        return self.r % self.m


@dataclass(frozen=True)
class WitnessFrame:
    """One induction level of the coprime construction.

    Attributes:
        modulus: The level's modulus.
        largest_prime: Largest prime dividing ``modulus``.
        reduced_modulus: ``modulus // largest_prime``.
        k: Witness inherited from the reduced modulus.
        q: Lift multiplier in ``[0, largest_prime)``.
    """

    modulus: int
    largest_prime: int
    reduced_modulus: int
    k: int
    q: int

    def to_dict(self) -> dict[str, int]:
        return {
            "modulus": self.modulus,
            "largest_prime": self.largest_prime,
            "reduced_modulus": self.reduced_modulus,
            "k": self.k,
            "q": self.q,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> WitnessFrame:
        return cls(
            modulus=int(data["modulus"]),
            largest_prime=int(data["largest_prime"]),
            reduced_modulus=int(data["reduced_modulus"]),
            k=int(data["k"]),
            q=int(data["q"]),
        )


@dataclass(frozen=True)
class Decomposition:
    """``m = u * v`` with every prime of ``u`` dividing ``a`` and ``gcd(a, v) == 1``.

    ``u = 1, v = m, s = 0`` when ``a`` is already coprime to ``m``.
    """

    u: int
    v: int
    s: int


@dataclass(frozen=True)
class WitnessCertificate:
    """A witness ``n`` plus everything needed to replay its construction."""

    query: WitnessQuery
    n: int
    decomposition: Decomposition
    frames: tuple[WitnessFrame, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        q, d = self.query, self.decomposition
        return {
            "a": q.a,
            "b": q.b,
            "m": q.m,
            "r": q.r,
            "n": self.n,
            "u": d.u,
            "v": d.v,
            "s": d.s,
            "frames": [f.to_dict() for f in self.frames],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> WitnessCertificate:
        return cls(
            query=WitnessQuery(
                a=int(data["a"]), b=int(data["b"]), m=int(data["m"]), r=int(data["r"])
            ),
            n=int(data["n"]),
            decomposition=Decomposition(u=int(data["u"]), v=int(data["v"]), s=int(data["s"])),
            frames=tuple(WitnessFrame.from_dict(f) for f in data.get("frames", [])),
        )


@dataclass
class CoverageReport:
    """Does a prefix of ``spec`` hit every residue class mod ``m``?

    Attributes:
        spec: The sequence scanned.
        m: Modulus.
        covered: Whether terms ``1..cap`` hit every class.
        first_cover_index: Least ``N`` with terms ``1..N`` covering, if any.
        cap: Scan limit.
        residues_missing: Classes never hit (empty when covered).
    """

    spec: SequenceSpec
    m: int
    covered: bool
    cap: int
    first_cover_index: int | None = None
    residues_missing: list[int] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "sequence": self.spec.label,
            "spec": self.spec.to_dict(),
            "m": self.m,
            "covered": self.covered,
            "first_cover_index": self.first_cover_index,
            "cap": self.cap,
            "residues_missing": list(self.residues_missing),
        }
