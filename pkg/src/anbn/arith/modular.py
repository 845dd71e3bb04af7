"""Modular exponentiation and inverses.

Negative bases and residues are reduced into ``[0, modulus)`` before use.
"""

from __future__ import annotations

import gmpy2

from anbn.errors import NotInvertibleError, PreconditionError

# Above this size gmpy2's powmod beats the builtin three-argument pow.
POWMOD_GMP_SIZE = 2**64


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """Return ``base ** exp mod modulus`` in ``[0, modulus)``."""
    if modulus < 1:
        raise PreconditionError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise PreconditionError(f"exponent must be >= 0, got {exp}")
    if modulus == 1:
        return 0

    base %= modulus
    if modulus < POWMOD_GMP_SIZE:
        return pow(base, exp, modulus)
    return int(gmpy2.powmod(base, exp, modulus))


def mod_inverse(a: int, modulus: int) -> int:
    """Return ``x`` in ``[0, modulus)`` with ``a * x ≡ 1 (mod modulus)``.

    Raises:
        NotInvertibleError: when ``gcd(a, modulus) != 1``.
    """
    if modulus < 1:
        raise PreconditionError(f"modulus must be >= 1, got {modulus}")
    if modulus == 1:
        return 0
    try:
        return pow(a % modulus, -1, modulus)
    except ValueError as exc:
        raise NotInvertibleError(a, modulus) from exc
