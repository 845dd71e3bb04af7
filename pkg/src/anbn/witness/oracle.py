"""Brute-force witness search."""

from __future__ import annotations

from anbn.errors import PreconditionError


def brute_witness(a: int, b: int, m: int, r: int, cap: int) -> int | None:
    """Least ``n <= cap`` with ``a**n + b*n ≡ r (mod m)``, or ``None``.

    Keeps ``a**n mod m`` incrementally, one modular multiplication per step.
    """
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")
    if cap < 1:
        raise PreconditionError(f"cap must be >= 1, got {cap}")

    target = r % m
    power = a % m
    step = b % m
    for n in range(1, cap + 1):
        if (power + step * n) % m == target:
            return n
        power = power * a % m
    return None
