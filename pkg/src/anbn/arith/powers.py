"""Perfect-power detection by exact integer k-th roots."""

from __future__ import annotations

import gmpy2

from anbn.arith.primes import primes_up_to
from anbn.arith.schemas import PerfectPowerWitness


def integer_root(n: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(n ** (1/k)), exact)`` for ``n >= 0``."""
    root, exact = gmpy2.iroot(n, k)
    return int(root), bool(exact)


def is_perfect_power(n: int) -> PerfectPowerWitness | None:
    """Return the maximal-exponent representation ``n = base ** exponent``.

    Only prime exponents are tried; a composite exponent shows up as repeated
    extraction of its prime factors. Values below 4 are never perfect powers.
    """
    if n < 4:
        return None

    base, exponent = n, 1
    for k in primes_up_to(n.bit_length()):
        if k > base.bit_length():
            break
        while True:
            root, exact = integer_root(base, k)
            if not exact or root < 2:
                break
            base = root
            exponent *= k

    if exponent == 1:
        return None
    return PerfectPowerWitness(base=base, exponent=exponent)
