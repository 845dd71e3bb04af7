"""Trial-division factorization and Euler's totient.

Moduli handled by the harness are desk-scale, so a 2·3·5 wheel up to a
configurable bound is all that is needed.
"""

from __future__ import annotations

from math import isqrt

from anbn.arith.schemas import Factorization
from anbn.errors import PreconditionError, TooLargeToFactorError

DEFAULT_FACTOR_BOUND = 10**12

# Gaps between successive integers coprime to 30, starting from 7.
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Factorization:
    """Factor ``n`` by wheel trial division.

    Raises:
        PreconditionError: when ``n < 1``.
        TooLargeToFactorError: when ``n`` exceeds ``bound``.
    """
    if n < 1:
        raise PreconditionError(f"cannot factor {n}: need n >= 1")
    if n > bound:
        raise TooLargeToFactorError(n, bound)

    factors: list[tuple[int, int]] = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))

    d = 7
    gap = 0
    limit = isqrt(n)
    while d <= limit:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
            limit = isqrt(n)
        d += _WHEEL_GAPS[gap]
        gap = (gap + 1) % len(_WHEEL_GAPS)

    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def euler_phi(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Euler's totient computed from the factorization of ``n``."""
    phi = 1
    for p, e in factorize(n, bound=bound).factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def radical_part(m: int, a: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Product of the maximal prime powers of ``m`` whose prime divides ``a``.

    ``a = 0`` is divisible by every prime, so the whole of ``m`` is returned.
    """
    if a == 0:
        return m
    u = 1
    for p, e in factorize(m, bound=bound).factors:
        if a % p == 0:
            u *= p**e
    return u
