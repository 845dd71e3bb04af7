"""Prime enumeration and strong probable-prime testing.

The sieve is shared process-wide: it grows under a lock and is only ever
replaced wholesale, so readers never see a partially filled table.
"""

from __future__ import annotations

import bisect
import logging
import random
import threading
from math import isqrt, prod

import gmpy2

from anbn.errors import CapacityError, PreconditionError

logger = logging.getLogger(__name__)

DEFAULT_SIEVE_CAPACITY = 50_000_000
DEFAULT_PRP_ROUNDS = 32

# Strong test with the primes up to 37 as bases is exact for every n < 3.18e23.
DETERMINISTIC_LIMIT = 2**64
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
    239, 241, 251,
)
_SMALL_PRIMORIAL = prod(_SMALL_PRIMES)


# ---------------------------------------------------------------------------
# Sieve
# ---------------------------------------------------------------------------


def _sieve(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return flags


class PrimeTable:
    """Eratosthenes sieve that grows on demand up to ``capacity``."""

    def __init__(self, capacity: int = DEFAULT_SIEVE_CAPACITY):
        self.capacity = capacity
        self._lock = threading.Lock()
        self._flags = _sieve(min(1000, capacity))
        self._primes = [i for i, f in enumerate(self._flags) if f]

    @property
    def limit(self) -> int:
        return len(self._flags) - 1

    def ensure(self, limit: int) -> None:
        """Make the table cover every integer up to ``limit``."""
        if limit <= self.limit:
            return
        if limit > self.capacity:
            raise CapacityError(f"sieve limit {limit} exceeds capacity {self.capacity}")
        with self._lock:
            if limit <= self.limit:
                return
            target = min(self.capacity, max(limit, 2 * self.limit))
            flags = _sieve(target)
            primes = [i for i, f in enumerate(flags) if f]
            self._flags, self._primes = flags, primes
            logger.info("Prime sieve extended to %d (%d primes)", target, len(primes))

    def is_prime(self, n: int) -> bool:
        if n < 2:
            return False
        self.ensure(n)
        return bool(self._flags[n])

    def primes_up_to(self, limit: int) -> list[int]:
        if limit < 2:
            return []
        self.ensure(limit)
        primes = self._primes
        return primes[: bisect.bisect_right(primes, limit)]

    def nth_prime(self, n: int) -> int:
        if n < 1:
            raise PreconditionError(f"prime index must be >= 1, got {n}")
        while len(self._primes) < n:
            if self.limit >= self.capacity:
                raise CapacityError(
                    f"the {n}-th prime lies beyond the sieve capacity {self.capacity}"
                )
            self.ensure(min(self.capacity, 2 * self.limit))
        return self._primes[n - 1]

    def largest_prime_below(self, n: int) -> int | None:
        """Largest prime strictly less than ``n``, or ``None`` when ``n <= 2``."""
        if n <= 2:
            return None
        self.ensure(n)
        idx = bisect.bisect_left(self._primes, n)
        return self._primes[idx - 1]


_table_lock = threading.Lock()
_tables: dict[int, PrimeTable] = {}


def get_prime_table(capacity: int = DEFAULT_SIEVE_CAPACITY) -> PrimeTable:
    """Return the shared table for ``capacity`` (singleton per capacity)."""
    with _table_lock:
        table = _tables.get(capacity)
        if table is None:
            table = _tables[capacity] = PrimeTable(capacity)
        return table


def primes_up_to(limit: int, capacity: int = DEFAULT_SIEVE_CAPACITY) -> list[int]:
    """All primes ``<= limit``, ascending."""
    return get_prime_table(capacity).primes_up_to(limit)


def nth_prime(n: int, capacity: int = DEFAULT_SIEVE_CAPACITY) -> int:
    """The ``n``-th prime, 1-indexed (``nth_prime(1) == 2``)."""
    return get_prime_table(capacity).nth_prime(n)


def largest_prime_below(n: int, capacity: int = DEFAULT_SIEVE_CAPACITY) -> int | None:
    return get_prime_table(capacity).largest_prime_below(n)


# ---------------------------------------------------------------------------
# Strong probable-prime test
# ---------------------------------------------------------------------------


def _strong_test(n: int, base: int, d: int, s: int) -> bool:
    """One Miller–Rabin round: ``n - 1 = d * 2**s`` with ``d`` odd."""
    if n < DETERMINISTIC_LIMIT:
        x = pow(base, d, n)
    else:
        x = int(gmpy2.powmod(base, d, n))
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probabilistic(n: int) -> bool:
    """True when :func:`is_probable_prime` uses random rounds for ``n``."""
    return n >= DETERMINISTIC_LIMIT


def is_probable_prime(
    n: int,
    rounds: int = DEFAULT_PRP_ROUNDS,
    rng: random.Random | None = None,
) -> bool:
    """Primality test, exact below 2**64 and strong-probable-prime above.

    Args:
        n: Integer to test; anything below 2 is not prime.
        rounds: Random-base rounds used when ``n >= 2**64`` (after a base-2 round).
        rng: Source of random bases. Defaults to a generator seeded with ``n``
            so repeated calls agree.

    Returns:
        ``True`` for every prime; ``False`` for composites below 2**64, and for
        composites above it except with probability below ``4**-rounds``.
    """
    if n < 2:
        return False
    if n <= _SMALL_PRIMES[-1]:
        return n in _SMALL_PRIMES
    if gmpy2.gcd(n, _SMALL_PRIMORIAL) != 1:
        return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < DETERMINISTIC_LIMIT:
        return all(_strong_test(n, a, d, s) for a in _DETERMINISTIC_BASES)

    if not _strong_test(n, 2, d, s):
        return False
    rng = rng or random.Random(n)
    for _ in range(rounds):
        if not _strong_test(n, rng.randrange(3, n - 1), d, s):
            return False
    return True
