"""Representation searches: prime values of 2^k shifts, partition sums and totient exponents.

Single-variable clauses scan ``k = 1, 2, ..., n - 1`` and report the least
``k``. Two-variable clauses (1.3ii, 1.6ii, 1.6iii) scan primes ``p`` descending
from the largest prime below ``n``; equivalently the remaining sum ascends,
with ties broken by ``(k, m)``.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, ClassVar

from anbn.arith.factor import euler_phi
from anbn.arith.primes import get_prime_table, is_probabilistic, is_probable_prime
from anbn.conjectures.base import ConjectureChecker, combine_outcomes
from anbn.conjectures.schemas import (
    CheckerOptions,
    ConjectureRecord,
    RecordStatus,
    RepresentationSpec,
    SearchOutcome,
)
from anbn.errors import PreconditionError
from anbn.sequences.partitions import partition_p, strict_partition_q
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Clause catalogue
# ---------------------------------------------------------------------------

CLAUSES: dict[str, RepresentationSpec] = {
    spec.clause_id: spec
    for spec in (
        RepresentationSpec("1.3i-first", "n-k+2^k prime, 0<k<n", 2),
        RepresentationSpec("1.3i-second", "n+k+2^k prime, 0<k<n", 4),
        RepresentationSpec("1.3ii", "n = p+(2^k-k)+(2^m-m)", 4),
        RepresentationSpec("1.6ii", "n = p+p(k)+p(m)", 4),
        RepresentationSpec("1.6iii", "n = p+2^k+p(m)", 5),
        RepresentationSpec("1.7ii-plus", "q(k)q(n-k)+1 prime, 0<k<n", 2),
        RepresentationSpec("1.7ii-minus", "q(k)q(n-k)-1 prime, 0<k<n", 6),
        RepresentationSpec("1.7iii", "p(k)^2+q(n-k)^2 or p(k)+q(n-k) prime, 0<k<n", 2),
        RepresentationSpec("1.8i-plus", "n = k+m, 2^(phi(k)/2+phi(m)/6)+3 prime", 10),
        RepresentationSpec("1.8i-minus", "n = k+m, 2^(phi(k)/2+phi(m)/6)-3 prime", 14),
        RepresentationSpec("1.8ii-plus", "n = k+m, 3*2^(phi(k)/2+phi(m)/8)+1 prime", 26),
        RepresentationSpec("1.8ii-minus", "n = k+m, 3*2^(phi(k)/2+phi(m)/12)-1 prime", 15),
    )
}

# Clauses searched as independent predicates; the clause holds if either does.
ALTERNATIVES: dict[str, tuple[str, ...]] = {
    "1.7iii": ("1.7iii-squares", "1.7iii-sum"),
}

# The first 1.3(i) assertion is open at this n: no k <= 2*10^5 is known to work.
UNRESOLVED_N = 1_657_977
UNRESOLVED_K_LIMIT = 200_000

PAIR_CLAUSES = ("1.3ii", "1.6ii", "1.6iii")


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return euler_phi(n)


def totient_exponent(k: int, m: int, divisor: int, reading: str = "strict") -> int | None:
    """``phi(k)/2 + phi(m)/divisor`` when integral under ``reading``, else ``None``.

    ``strict`` requires each fraction to be an integer; ``sum`` only the total.
    """
    first, second = Fraction(_phi(k), 2), Fraction(_phi(m), divisor)
    if reading == "strict":
        if first.denominator != 1 or second.denominator != 1:
            return None
    total = first + second
    return int(total) if total.denominator == 1 else None


# (divisor, coefficient, offset): value = coefficient * 2**exponent + offset
_TOTIENT_FORMS: dict[str, tuple[int, int, int]] = {
    "1.8i-plus": (6, 1, 3),
    "1.8i-minus": (6, 1, -3),
    "1.8ii-plus": (8, 3, 1),
    "1.8ii-minus": (12, 3, -1),
}


def _q(n: int, opts: CheckerOptions) -> int:
    return strict_partition_q(n, opts.partition_capacity)


def _p(n: int, opts: CheckerOptions) -> int:
    return partition_p(n, opts.partition_capacity)


_SINGLE_VALUES: dict[str, Callable[[int, int, CheckerOptions], int | None]] = {
    "1.3i-first": lambda n, k, opts: n - k + 2**k,
    "1.3i-second": lambda n, k, opts: n + k + 2**k,
    "1.7ii-plus": lambda n, k, opts: _q(k, opts) * _q(n - k, opts) + 1,
    "1.7ii-minus": lambda n, k, opts: _q(k, opts) * _q(n - k, opts) - 1,
    "1.7iii-squares": lambda n, k, opts: _p(k, opts) ** 2 + _q(n - k, opts) ** 2,
    "1.7iii-sum": lambda n, k, opts: _p(k, opts) + _q(n - k, opts),
}


def single_value(clause_id: str, n: int, k: int, opts: CheckerOptions) -> int | None:
    """The number whose primality the clause asks for at ``k`` (``None`` = skipped)."""
    if clause_id in _TOTIENT_FORMS:
        divisor, coefficient, offset = _TOTIENT_FORMS[clause_id]
        exponent = totient_exponent(k, n - k, divisor, opts.totient_reading)
        return None if exponent is None else coefficient * 2**exponent + offset
    return _SINGLE_VALUES[clause_id](n, k, opts)


# ---------------------------------------------------------------------------
# Two-variable candidates
# ---------------------------------------------------------------------------


def _bounded_values(term: Callable[[int], int], limit: int) -> list[tuple[int, int]]:
    """``(index, term(index))`` for index = 1, 2, ... while the term is <= limit."""
    values = []
    index = 1
    while (value := term(index)) <= limit:
        values.append((index, value))
        index += 1
    return values


def pair_candidates(clause_id: str, n: int, opts: CheckerOptions) -> list[tuple[int, int, int]]:
    """``(sum, k, m)`` triples in search order; the prime to test is ``n - sum``."""
    limit = n - 2
    if clause_id == "1.3ii":
        left = right = _bounded_values(lambda k: 2**k - k, limit)
        symmetric = True
    elif clause_id == "1.6ii":
        left = right = _bounded_values(lambda k: _p(k, opts), limit)
        symmetric = True
    elif clause_id == "1.6iii":
        left = _bounded_values(lambda k: 2**k, limit)
        right = _bounded_values(lambda m: _p(m, opts), limit)
        symmetric = False
    else:
        raise PreconditionError(f"{clause_id} is not a two-variable clause")

    triples = [
        (x + y, k, m)
        for k, x in left
        for m, y in right
        if x + y <= limit and (not symmetric or k <= m)
    ]
    triples.sort()
    return triples


def _is_small_prime(p: int, opts: CheckerOptions) -> bool:
    table = get_prime_table(opts.sieve_capacity)
    if p <= table.capacity:
        return table.is_prime(p)
    return is_probable_prime(p, opts.prp_rounds)


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------


def _search_single(
    clause_id: str, n: int, opts: CheckerOptions, rng: random.Random
) -> SearchOutcome:
    if clause_id == "1.3i-first" and n == UNRESOLVED_N and not opts.long_mode:
        return SearchOutcome(None, RecordStatus.INDETERMINATE,
                             note=f"least k is unknown and exceeds {UNRESOLVED_K_LIMIT}")

    upper = n - 1
    limit = upper if opts.max_k is None else min(upper, opts.max_k)
    if clause_id == "1.3i-first" and n == UNRESOLVED_N:
        limit = min(limit, UNRESOLVED_K_LIMIT)

    skipped = 0
    for k in range(1, limit + 1):
        value = single_value(clause_id, n, k, opts)
        if value is None:
            skipped += 1
            continue
        if is_probable_prime(value, opts.prp_rounds, rng):
            rounds = opts.prp_rounds if is_probabilistic(value) else 0
            witness: dict[str, Any] = {"k": k}
            if clause_id in _TOTIENT_FORMS:
                witness.update(m=n - k, skipped=skipped)
            return SearchOutcome(witness, RecordStatus.VERIFIED, prp_rounds=rounds)

    if clause_id == "1.3i-first" and n == UNRESOLVED_N:
        return SearchOutcome(None, RecordStatus.INDETERMINATE, note=f"no k <= {limit}")
    if limit < upper:
        return SearchOutcome(None, RecordStatus.EXHAUSTED_CAP, note=f"no k <= {limit}")
    # Pairs without an integral exponent were never tested.
    if skipped:
        return SearchOutcome(
            None,
            RecordStatus.INDETERMINATE,
            note=(f"no k < {n} under the {opts.totient_reading} totient reading; "
                  f"{skipped} non-integral pairs skipped"),
        )
    return SearchOutcome(None, RecordStatus.COUNTEREXAMPLE, note=f"no k < {n}")


def _search_pair(clause_id: str, n: int, opts: CheckerOptions) -> SearchOutcome:
    for total, k, m in pair_candidates(clause_id, n, opts):
        p = n - total
        if _is_small_prime(p, opts):
            return SearchOutcome({"p": p, "k": k, "m": m}, RecordStatus.VERIFIED)
    return SearchOutcome(None, RecordStatus.COUNTEREXAMPLE, note=f"no representation of {n}")


def search_clause(
    clause_id: str, n: int, opts: CheckerOptions, rng: random.Random
) -> SearchOutcome:
    """Run one predicate (a clause or one alternative of a clause)."""
    if clause_id in PAIR_CLAUSES:
        return _search_pair(clause_id, n, opts)
    return _search_single(clause_id, n, opts, rng)


def _search_with_alternatives(
    clause_id: str, n: int, opts: CheckerOptions, rng: random.Random
) -> tuple[dict[str, Any], RecordStatus, int]:
    outcomes = {alt: search_clause(alt, n, opts, rng) for alt in ALTERNATIVES[clause_id]}
    witness, status, rounds = combine_outcomes(outcomes)
    if any(o.status is RecordStatus.VERIFIED for o in outcomes.values()):
        status = RecordStatus.VERIFIED
    return witness, status, rounds


def representation_search(
    spec: RepresentationSpec | str,
    n: int,
    options: CheckerOptions | None = None,
    rng: random.Random | None = None,
) -> ConjectureRecord:
    """Search one clause at ``n`` and return the timed record.

    Raises:
        PreconditionError: ``n`` is below the clause's threshold.
    """
    spec = CLAUSES[spec] if isinstance(spec, str) else spec
    if n < spec.min_n:
        raise PreconditionError(f"{spec.clause_id} applies to n >= {spec.min_n}, got {n}")
    opts = options or CheckerOptions()
    rng = rng or random.Random(f"{opts.seed}:{spec.clause_id}:{n}")

    start = time.perf_counter()
    if spec.clause_id in ALTERNATIVES:
        witness, status, rounds = _search_with_alternatives(spec.clause_id, n, opts, rng)
    else:
        outcome = search_clause(spec.clause_id, n, opts, rng)
        witness, status, rounds = outcome.payload() or {}, outcome.status, outcome.prp_rounds
    return ConjectureRecord(
        conjecture_id=spec.clause_id,
        parameter=n,
        witness=witness,
        status=status,
        elapsed_ms=(time.perf_counter() - start) * 1000,
        prp_rounds=rounds,
    )


# ---------------------------------------------------------------------------
# Independent re-evaluation
# ---------------------------------------------------------------------------


def _phi_by_gcd(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


def _direct_single_value(clause_id: str, n: int, k: int, opts: CheckerOptions) -> int | None:
    """Same predicate as the search, but totients recounted by gcd."""
    if clause_id not in _TOTIENT_FORMS:
        return single_value(clause_id, n, k, opts)
    divisor, coefficient, offset = _TOTIENT_FORMS[clause_id]
    first, second = Fraction(_phi_by_gcd(k), 2), Fraction(_phi_by_gcd(n - k), divisor)
    if opts.totient_reading == "strict" and (first.denominator != 1 or second.denominator != 1):
        return None
    total = first + second
    if total.denominator != 1:
        return None
    return coefficient * 2 ** int(total) + offset


def _pair_terms(clause_id: str, k: int, m: int, opts: CheckerOptions) -> int:
    if clause_id == "1.3ii":
        return (2**k - k) + (2**m - m)
    if clause_id == "1.6ii":
        return _p(k, opts) + _p(m, opts)
    return 2**k + _p(m, opts)


def replay_clause(clause_id: str, n: int, witness: dict[str, Any], opts: CheckerOptions) -> Verdict:
    """Re-check one predicate's witness by direct evaluation."""
    fresh = random.Random(f"replay:{clause_id}:{n}")
    if clause_id in PAIR_CLAUSES:
        p, k, m = witness["p"], witness["k"], witness["m"]
        if k < 1 or m < 1:
            return Verdict(False, f"{clause_id}: k and m must be positive")
        if p + _pair_terms(clause_id, k, m, opts) != n:
            return Verdict(False, f"{clause_id}: {p} + terms({k}, {m}) != {n}")
        if not is_probable_prime(p, opts.prp_rounds, fresh):
            return Verdict(False, f"{clause_id}: {p} is not prime")
        return Verdict(True)

    k = witness["k"]
    if not 0 < k < n:
        return Verdict(False, f"{clause_id}: k={k} outside (0, {n})")
    value = _direct_single_value(clause_id, n, k, opts)
    if value is None:
        return Verdict(False, f"{clause_id}: exponent at k={k} is not integral")
    if not is_probable_prime(value, opts.prp_rounds, fresh):
        return Verdict(False, f"{clause_id}: value at k={k} is not prime")
    return Verdict(True)


def rescan_minimal(
    clause_id: str, n: int, witness: dict[str, Any], opts: CheckerOptions
) -> Verdict:
    """Confirm no candidate earlier in the search order satisfies the predicate."""
    rng = random.Random(f"rescan:{clause_id}:{n}")
    if clause_id in PAIR_CLAUSES:
        target = (n - witness["p"], witness["k"], witness["m"])
        for candidate in pair_candidates(clause_id, n, opts):
            if candidate == target:
                return Verdict(True)
            if is_probable_prime(n - candidate[0], opts.prp_rounds, rng):
                return Verdict(False, f"{clause_id}: earlier candidate {candidate} works")
        return Verdict(False, f"{clause_id}: witness not in the candidate list")

    for k in range(1, witness["k"]):
        value = _direct_single_value(clause_id, n, k, opts)
        if value is not None and is_probable_prime(value, opts.prp_rounds, rng):
            return Verdict(False, f"{clause_id}: k={k} already works")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Checkers (parameter = n)
# ---------------------------------------------------------------------------


class RepresentationChecker(ConjectureChecker):
    """Runs every clause of one conjecture part that applies at ``n``."""

    clause_ids: ClassVar[tuple[str, ...]]

    def applicable(self, n: int) -> list[str]:
        return [c for c in self.clause_ids if n >= CLAUSES[c].min_n]

    def _predicates(self, clause_id: str) -> tuple[str, ...]:
        return ALTERNATIVES.get(clause_id, (clause_id,))

    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        outcomes: dict[str, SearchOutcome] = {}
        for clause_id in self.applicable(parameter):
            for predicate in self._predicates(clause_id):
                outcomes[predicate] = search_clause(predicate, parameter, self.options, rng)

        witness, status, rounds = combine_outcomes(outcomes)
        for clause_id, alternatives in ALTERNATIVES.items():
            if clause_id in self.clause_ids and any(
                outcomes[a].status is RecordStatus.VERIFIED for a in alternatives if a in outcomes
            ):
                status = RecordStatus.VERIFIED
        return witness, status, rounds

    def replay(self, record: ConjectureRecord) -> Verdict:
        statuses = record.witness.get("clause_status", {})
        verified = [c for c, s in statuses.items() if s == RecordStatus.VERIFIED.value]
        if not verified:
            return Verdict(False, "no verified clause to replay")
        for predicate in verified:
            verdict = replay_clause(predicate, record.parameter, record.witness[predicate],
                                    self.options)
            if not verdict:
                return verdict
        return Verdict(True)

    def rescan(self, record: ConjectureRecord) -> Verdict:
        """Witness-minimality spot check for every verified predicate."""
        statuses = record.witness.get("clause_status", {})
        for predicate, status in statuses.items():
            if status != RecordStatus.VERIFIED.value:
                continue
            verdict = rescan_minimal(predicate, record.parameter, record.witness[predicate],
                                     self.options)
            if not verdict:
                return verdict
        return Verdict(True)


class ShiftedPowerPrimeChecker(RepresentationChecker):
    """Id ``1.3i``: both assertions (the second from n = 4)."""

    conjecture_id = "1.3i"
    threshold = 2
    default_span = 2000
    clause_ids = ("1.3i-first", "1.3i-second")


class PowerPairSumChecker(RepresentationChecker):
    conjecture_id = "1.3ii"
    threshold = 4
    default_span = 10_000
    clause_ids = ("1.3ii",)


class PartitionPairSumChecker(RepresentationChecker):
    conjecture_id = "1.6ii"
    threshold = 4
    default_span = 10_000
    clause_ids = ("1.6ii",)


class PowerPartitionSumChecker(RepresentationChecker):
    conjecture_id = "1.6iii"
    threshold = 5
    default_span = 10_000
    clause_ids = ("1.6iii",)


class StrictProductPrimeChecker(RepresentationChecker):
    conjecture_id = "1.7ii"
    threshold = 2
    default_span = 2000
    clause_ids = ("1.7ii-plus", "1.7ii-minus")


class MixedPartitionPrimeChecker(RepresentationChecker):
    conjecture_id = "1.7iii"
    threshold = 2
    default_span = 2000
    clause_ids = ("1.7iii",)


class TotientPowerPrimeChecker(RepresentationChecker):
    """Id ``1.8i``: 2^e + 3 from n = 10, 2^e - 3 from n = 14."""

    conjecture_id = "1.8i"
    threshold = 10
    default_span = 991
    clause_ids = ("1.8i-plus", "1.8i-minus")


class TotientTriplePowerPrimeChecker(RepresentationChecker):
    """Id ``1.8ii``: 3*2^e - 1 from n = 15, 3*2^e + 1 from n = 26."""

    conjecture_id = "1.8ii"
    threshold = 15
    default_span = 986
    clause_ids = ("1.8ii-plus", "1.8ii-minus")
