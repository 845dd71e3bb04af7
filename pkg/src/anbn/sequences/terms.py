"""Concrete sequences: a^n + bn, prime shifts, central binomial and Catalan shifts."""

from __future__ import annotations

from abc import abstractmethod
from collections.abc import Iterator

from anbn.arith.modular import pow_mod
from anbn.arith.primes import DEFAULT_SIEVE_CAPACITY, get_prime_table
from anbn.errors import PreconditionError
from anbn.sequences.base import IntegerSequence
from anbn.sequences.binomial import (
    DEFAULT_BINOMIAL_CAPACITY,
    catalan,
    central_binomial,
    iter_catalans,
    iter_central_binomials,
)


class ExpLinearSequence(IntegerSequence):
    """``a**n + b*n``."""

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b

    def term(self, n: int) -> int:
        self._check_index(n)
        return self.a**n + self.b * n

    def term_mod(self, n: int, m: int) -> int:
        self._check_index(n)
        return (pow_mod(self.a, n, m) + self.b * n) % m

    def iter_mod(self, m: int, count: int) -> Iterator[int]:
        if m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {m}")
        power = self.a % m
        step = self.b % m
        for n in range(1, count + 1):
            yield (power + step * n) % m
            power = power * self.a % m


class _PrimeSequence(IntegerSequence):
    def __init__(self, sieve_capacity: int = DEFAULT_SIEVE_CAPACITY):
        self._table = get_prime_table(sieve_capacity)

    @abstractmethod
    def _combine(self, n: int, prime: int) -> int:
        """Term value from the index and the n-th prime."""

    def term(self, n: int) -> int:
        self._check_index(n)
        return self._combine(n, self._table.nth_prime(n))

    def iter_terms(self, count: int) -> Iterator[int]:
        if count < 1:
            return
        last = self._table.nth_prime(count)
        primes = self._table.primes_up_to(last)
        for n, prime in enumerate(primes, start=1):
            yield self._combine(n, prime)


class PrimeMinusNSequence(_PrimeSequence):
    """``p_n - n``."""

    def _combine(self, n: int, prime: int) -> int:
        return prime - n


class NTimesPrimeSequence(_PrimeSequence):
    """``n * p_n``."""

    def _combine(self, n: int, prime: int) -> int:
        return n * prime


class _ShiftedBinomialSequence(IntegerSequence):
    """``X_n + sign * n`` for an exactly computed ``X_n``."""

    sign: int = 1

    def __init__(self, binomial_capacity: int = DEFAULT_BINOMIAL_CAPACITY):
        self.capacity = binomial_capacity

    @abstractmethod
    def _value(self, n: int) -> int:
        """Unshifted exact value."""

    @abstractmethod
    def _iter_values(self, count: int) -> Iterator[tuple[int, int]]:
        """Unshifted exact values for 1..count."""

    def term(self, n: int) -> int:
        self._check_index(n)
        return self._value(n) + self.sign * n

    def iter_terms(self, count: int) -> Iterator[int]:
        for n, value in self._iter_values(count):
            yield value + self.sign * n


class CentralBinomPlusNSequence(_ShiftedBinomialSequence):
    sign = 1

    def _value(self, n: int) -> int:
        return central_binomial(n, self.capacity)

    def _iter_values(self, count: int) -> Iterator[tuple[int, int]]:
        return iter_central_binomials(count, self.capacity)


class CentralBinomMinusNSequence(CentralBinomPlusNSequence):
    sign = -1


class CatalanPlusNSequence(_ShiftedBinomialSequence):
    sign = 1

    def _value(self, n: int) -> int:
        return catalan(n, self.capacity)

    def _iter_values(self, count: int) -> Iterator[tuple[int, int]]:
        return iter_catalans(count, self.capacity)


class CatalanMinusNSequence(CatalanPlusNSequence):
    sign = -1
