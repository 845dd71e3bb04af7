"""Exact integer and modular arithmetic shared by every other module."""

from anbn.arith.factor import euler_phi, factorize, radical_part
from anbn.arith.modular import mod_inverse, pow_mod
from anbn.arith.powers import integer_root, is_perfect_power
from anbn.arith.primes import (
    PrimeTable,
    get_prime_table,
    is_probabilistic,
    is_probable_prime,
    largest_prime_below,
    nth_prime,
    primes_up_to,
)
from anbn.arith.schemas import Factorization, PerfectPowerWitness

__all__ = [
    "Factorization",
    "PerfectPowerWitness",
    "PrimeTable",
    "euler_phi",
    "factorize",
    "get_prime_table",
    "integer_root",
    "is_perfect_power",
    "is_probabilistic",
    "is_probable_prime",
    "largest_prime_below",
    "mod_inverse",
    "nth_prime",
    "pow_mod",
    "primes_up_to",
    "radical_part",
]
