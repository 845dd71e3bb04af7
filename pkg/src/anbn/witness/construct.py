"""Constructive witnesses: n <= m² with a^n + bn ≡ r (mod m).

Coprime case (gcd(ab, m) = 1): induct on m, peeling the largest prime p of m.
With m0 = m / p and k a witness modulo m0, every n = k + m0·q·L, where L is the
product of (p_i - 1) over the primes of m, keeps a^n ≡ a^k (mod m) because φ(m)
divides m0·L. Choosing q mod p fixes the residue modulo m.

General case: split m = u·v with the primes of u dividing a and gcd(a, v) = 1,
solve b·s ≡ r (mod u), and reduce to the coprime case modulo v for the query
(a^u, a*^s·b·u, a*^s·(r - b·s)) where a·a* ≡ 1 (mod v). Then n = u·k + s.
"""

from __future__ import annotations

import logging
from math import gcd, prod

from anbn.arith.factor import DEFAULT_FACTOR_BOUND, factorize, radical_part
from anbn.arith.modular import mod_inverse, pow_mod
from anbn.errors import PreconditionError
from anbn.witness.schemas import Decomposition, WitnessCertificate, WitnessFrame, WitnessQuery

logger = logging.getLogger(__name__)


def totient_multiplier(modulus: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Product of ``p - 1`` over the distinct primes ``p`` of ``modulus``."""
    return prod(p - 1 for p in factorize(modulus, bound=bound).primes)


def lift(a: int, b: int, r: int, modulus: int, prime: int, k: int, multiplier: int) -> int:
    """Lift multiplier ``q`` in ``[0, prime)`` turning witness ``k`` mod ``modulus // prime``
    into one modulo ``modulus``.

    Only ``q0 mod prime`` is needed, where ``a**k + b*k = r + m0*q0``. Since
    ``m0 * prime == modulus``, ``(a**k + b*k - r) mod modulus == m0 * (q0 mod prime)``.
    """
    reduced = modulus // prime
    t = (pow_mod(a, k, modulus) + b * k - r) % modulus
    q0 = (t // reduced) % prime
    return (-q0 * mod_inverse(b * multiplier, prime)) % prime


def witness_coprime(
    a: int,
    b: int,
    m: int,
    r: int,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> tuple[int, list[WitnessFrame]]:
    """Witness for ``gcd(a*b, m) == 1``.

    Returns:
        ``(n, frames)`` with ``1 <= n <= m**2``; frames are ordered from the
        innermost level (reduced modulus 1) outward. ``m == 1`` gives ``(1, [])``.

    Raises:
        PreconditionError: when ``m < 1`` or ``gcd(a*b, m) != 1``.
    """
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")
    if gcd(a * b, m) != 1:
        raise PreconditionError(f"a*b = {a * b} is not coprime to m = {m}")

    chain: list[tuple[int, int, int]] = []
    level = m
    while level > 1:
        fac = factorize(level, bound=factor_bound)
        prime = fac.largest_prime
        chain.append((level, prime, prod(p - 1 for p in fac.primes)))
        level //= prime

    n = 1
    frames: list[WitnessFrame] = []
    for modulus, prime, multiplier in reversed(chain):
        reduced = modulus // prime
        q = lift(a, b, r, modulus, prime, n, multiplier)
        frames.append(WitnessFrame(modulus, prime, reduced, n, q))
        n += reduced * q * multiplier
        logger.debug("level m=%d p=%d: k=%d q=%d -> n=%d", modulus, prime, frames[-1].k, q, n)

    if not 1 <= n <= m * m:
        raise AssertionError(f"construction produced n={n} outside [1, {m * m}]")
    return n, frames


def reduced_query(a: int, b: int, r: int, u: int, v: int, s: int) -> tuple[int, int, int]:
    """The coprime query modulo ``v`` whose witness ``k`` gives ``n = u*k + s``.

    Returns ``(a**u, a*^s * b * u, a*^s * (r - b*s))`` reduced mod ``v``.
    """
    if v == 1:
        return 0, 0, 0
    a_star_s = pow_mod(mod_inverse(a, v), s, v)
    return pow_mod(a, u, v), a_star_s * b * u % v, a_star_s * (r - b * s) % v


def witness(query: WitnessQuery, factor_bound: int = DEFAULT_FACTOR_BOUND) -> WitnessCertificate:
    """Construct a replayable witness for ``query``."""
    a, b, m, r = query.a, query.b, query.m, query.r

    if gcd(a, m) == 1:
        n, frames = witness_coprime(a, b, m, r, factor_bound=factor_bound)
        decomposition = Decomposition(u=1, v=m, s=0)
    else:
        u = radical_part(m, a, bound=factor_bound)
        v = m // u
        s = r * mod_inverse(b, u) % u
        a_v, b_v, r_v = reduced_query(a, b, r, u, v, s)
        k, frames = witness_coprime(a_v, b_v, v, r_v, factor_bound=factor_bound)
        n = u * k + s
        decomposition = Decomposition(u=u, v=v, s=s)

    if not 1 <= n <= m * m:
        raise AssertionError(f"witness n={n} outside [1, {m * m}] for {query}")
    logger.debug("witness %s -> n=%d (u=%d)", query, n, decomposition.u)
    return WitnessCertificate(
        query=query, n=n, decomposition=decomposition, frames=tuple(frames)
    )
