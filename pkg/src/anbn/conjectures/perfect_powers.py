"""Perfect-power scans over partition, Bell, prime and binomial values."""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from enum import StrEnum
from typing import Any, ClassVar

from anbn.arith.powers import integer_root, is_perfect_power
from anbn.arith.primes import nth_prime
from anbn.arith.schemas import PerfectPowerWitness
from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.schemas import CheckerOptions, ConjectureRecord, RecordStatus
from anbn.errors import PreconditionError
from anbn.sequences.bell import bell
from anbn.sequences.binomial import catalan, central_binomial
from anbn.sequences.partitions import partition_p
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)


class PowerTarget(StrEnum):
    PARTITION_VALUES = "partition-values"
    BELL_VALUES = "bell-values"
    N_TIMES_PRIME_PLUS_1 = "n-times-prime-plus-1"
    CENTRAL_BINOM_PLUS_N = "binom-plus-n"
    CENTRAL_BINOM_MINUS_N = "binom-minus-n"
    CATALAN_PLUS_N = "catalan-plus-n"
    CATALAN_MINUS_N = "catalan-minus-n"


# Least n each claim covers; below it hits are expected (6+2 = 2^3, C_3+3 = 2^3).
CLAIM_START: dict[PowerTarget, int] = {
    PowerTarget.PARTITION_VALUES: 1,
    PowerTarget.BELL_VALUES: 1,
    PowerTarget.N_TIMES_PRIME_PLUS_1: 1,
    PowerTarget.CENTRAL_BINOM_PLUS_N: 3,
    PowerTarget.CENTRAL_BINOM_MINUS_N: 3,
    PowerTarget.CATALAN_PLUS_N: 4,
    PowerTarget.CATALAN_MINUS_N: 4,
}

# 3*p_3 + 1 = 16.
KNOWN_EXCEPTIONS: dict[PowerTarget, frozenset[int]] = {
    PowerTarget.N_TIMES_PRIME_PLUS_1: frozenset({3}),
}


def target_value(target: PowerTarget | str, n: int, opts: CheckerOptions | None = None) -> int:
    """Exact value of ``target`` at ``n``."""
    target = PowerTarget(target)
    opts = opts or CheckerOptions()
    values: dict[PowerTarget, Callable[[], int]] = {
        PowerTarget.PARTITION_VALUES: lambda: partition_p(n, opts.partition_capacity),
        PowerTarget.BELL_VALUES: lambda: bell(n, opts.bell_capacity),
        PowerTarget.N_TIMES_PRIME_PLUS_1: lambda: n * nth_prime(n, opts.sieve_capacity) + 1,
        PowerTarget.CENTRAL_BINOM_PLUS_N: lambda: central_binomial(n, opts.binomial_capacity) + n,
        PowerTarget.CENTRAL_BINOM_MINUS_N: lambda: central_binomial(n, opts.binomial_capacity) - n,
        PowerTarget.CATALAN_PLUS_N: lambda: catalan(n, opts.binomial_capacity) + n,
        PowerTarget.CATALAN_MINUS_N: lambda: catalan(n, opts.binomial_capacity) - n,
    }
    return values[target]()


def perfect_power_scan(
    target: PowerTarget | str,
    n_from: int,
    n_to: int,
    options: CheckerOptions | None = None,
) -> list[tuple[int, PerfectPowerWitness]]:
    """Every ``n`` in ``[n_from, n_to]`` whose target value is a perfect power.

    The range may start below the claim's threshold; an empty list is the
    outcome the conjectures predict from the threshold on.
    """
    target = PowerTarget(target)
    if n_from < 1 or n_from > n_to:
        raise PreconditionError(f"bad range [{n_from}, {n_to}]")
    hits = []
    for n in range(n_from, n_to + 1):
        found = is_perfect_power(target_value(target, n, options))
        if found is not None:
            hits.append((n, found))
    logger.info("%s on [%d, %d]: %d perfect powers", target.value, n_from, n_to, len(hits))
    return hits


def _power_by_roots(value: int) -> tuple[int, int] | None:
    """Any ``(x, e)`` with ``x**e == value`` and ``e >= 2``, largest ``e`` first."""
    for e in range(max(value.bit_length(), 2), 1, -1):
        root, exact = integer_root(value, e)
        if exact and root >= 2:
            return root, e
    return None


# ---------------------------------------------------------------------------
# Checkers (parameter = n)
# ---------------------------------------------------------------------------


class PerfectPowerChecker(ConjectureChecker):
    """A value ``x**m`` at ``n`` is a counterexample unless listed as an exception."""

    targets: ClassVar[tuple[PowerTarget, ...]]
    default_span = 500

    def applicable(self, n: int) -> list[PowerTarget]:
        return [t for t in self.targets if n >= CLAIM_START[t]]

    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        hits: dict[str, Any] = {}
        status = RecordStatus.VERIFIED
        for target in self.applicable(parameter):
            found = is_perfect_power(target_value(target, parameter, self.options))
            if found is None:
                hits[target.value] = None
                continue
            hits[target.value] = found.to_dict()
            if parameter not in KNOWN_EXCEPTIONS.get(target, frozenset()):
                status = RecordStatus.COUNTEREXAMPLE
        return {"perfect_powers": hits}, status, 0

    def replay(self, record: ConjectureRecord) -> Verdict:
        n = record.parameter
        hits = record.witness.get("perfect_powers", {})
        expected = {t.value for t in self.applicable(n)}
        if set(hits) != expected:
            return Verdict(False, f"targets {sorted(hits)} but {sorted(expected)} apply at n={n}")
        for name, claimed in hits.items():
            target = PowerTarget(name)
            value = target_value(target, n, self.options)
            by_roots = _power_by_roots(value)
            if claimed is None and by_roots is not None:
                return Verdict(False, f"{name} at n={n} equals {by_roots[0]}^{by_roots[1]}")
            if claimed is not None:
                if claimed["base"] ** claimed["exponent"] != value:
                    return Verdict(False, f"{name} at n={n}: claimed power is wrong")
                if n not in KNOWN_EXCEPTIONS.get(target, frozenset()):
                    return Verdict(False, f"{name} at n={n} is not a listed exception")
        return Verdict(True)


class PrimeProductPowerChecker(PerfectPowerChecker):
    """Id ``1.4ii``: n*p_n + 1 (n = 3 excepted)."""

    conjecture_id = "1.4ii"
    default_span = 10_000
    targets = (PowerTarget.N_TIMES_PRIME_PLUS_1,)


class BinomialPowerChecker(PerfectPowerChecker):
    conjecture_id = "1.5ii"
    threshold = 3
    targets = (
        PowerTarget.CENTRAL_BINOM_PLUS_N,
        PowerTarget.CENTRAL_BINOM_MINUS_N,
        PowerTarget.CATALAN_PLUS_N,
        PowerTarget.CATALAN_MINUS_N,
    )


class PartitionPowerChecker(PerfectPowerChecker):
    conjecture_id = "1.6i"
    default_span = 2000
    targets = (PowerTarget.PARTITION_VALUES,)


class BellPowerChecker(PerfectPowerChecker):
    conjecture_id = "1.6i-bell"
    targets = (PowerTarget.BELL_VALUES,)
