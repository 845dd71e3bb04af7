"""Data models for exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    Attributes:
        factors: ``(prime, exponent)`` pairs, ascending by prime. Empty for 1.
    """

    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError(f"primes must be distinct and ascending: {primes}")
        if any(e < 1 for _, e in self.factors):
            raise ValueError(f"exponents must be positive: {self.factors}")

    @property
    def value(self) -> int:
        """The factored integer."""
        return prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def prime_count(self) -> int:
        """Number of distinct primes (the proof's r)."""
        return len(self.factors)

    @property
    def largest_prime(self) -> int | None:
        return self.factors[-1][0] if self.factors else None

    def exponent_of(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def to_list(self) -> list[tuple[int, int]]:
        return list(self.factors)


@dataclass(frozen=True)
class PerfectPowerWitness:
    """``base ** exponent`` with the exponent maximal (so the base is minimal)."""

    base: int
    exponent: int

    @property
    def value(self) -> int:
        return self.base**self.exponent

    def to_dict(self) -> dict[str, int]:
        return {"base": self.base, "exponent": self.exponent}
