"""Coverage conjectures: complete residue systems within a stated prefix.

    C1.1   {a^n - n} (or a^n + n), n <= 2p_m - 3
    C1.4i  {p_n - n} and {n·p_n}, n <= 2p_m - 3
    C1.5i  C(2n,n) + n, C(2n,n) - n, C_n - n, C_n + n with n <= ⌊m²/2⌋ + 3, 15, 7, 23
    T1.1   {a^n + bn}, n <= m², every b in [1, m) coprime to m
"""

from __future__ import annotations

import random
from enum import StrEnum
from math import gcd
from typing import Any, ClassVar

from anbn.arith.primes import nth_prime
from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.schemas import ConjectureRecord, RecordStatus
from anbn.errors import PreconditionError
from anbn.sequences.factory import seq_term
from anbn.sequences.schemas import SequenceKind, SequenceSpec
from anbn.witness.coverage import coverage_index
from anbn.witness.schemas import CoverageReport, Verdict


class CoverageFamily(StrEnum):
    C1_1 = "C1.1"
    C1_4I = "C1.4i"
    C1_5I = "C1.5i"
    T1_1 = "T1.1-empirical"


# Offsets added to ⌊m²/2⌋ for each set of the binomial family.
BINOMIAL_OFFSETS: dict[SequenceKind, int] = {
    SequenceKind.CENTRAL_BINOM_PLUS_N: 3,
    SequenceKind.CENTRAL_BINOM_MINUS_N: 15,
    SequenceKind.CATALAN_MINUS_N: 7,
    SequenceKind.CATALAN_PLUS_N: 23,
}


def prime_bound(m: int, sieve_capacity: int = 50_000_000) -> int:
    """``2 * p_m - 3``."""
    return 2 * nth_prime(m, sieve_capacity) - 3


def _signs(sign: str) -> list[int]:
    return {"minus": [-1], "plus": [1], "both": [-1, 1]}[sign]


def family_sets(
    family: CoverageFamily | str,
    m: int,
    a: int = 2,
    sign: str = "minus",
    sieve_capacity: int = 50_000_000,
) -> list[tuple[SequenceSpec, int]]:
    """The ``(sequence, bound)`` pairs a family claims for modulus ``m``."""
    family = CoverageFamily(family)
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")

    if family is CoverageFamily.C1_1:
        bound = prime_bound(m, sieve_capacity)
        return [(SequenceSpec.exp_linear(a, b), bound) for b in _signs(sign)]
    if family is CoverageFamily.C1_4I:
        bound = prime_bound(m, sieve_capacity)
        return [
            (SequenceSpec(SequenceKind.PRIME_MINUS_N), bound),
            (SequenceSpec(SequenceKind.N_TIMES_PRIME), bound),
        ]
    if family is CoverageFamily.C1_5I:
        half = m * m // 2
        return [(SequenceSpec(kind), half + offset) for kind, offset in BINOMIAL_OFFSETS.items()]
    coprime_bs = [b for b in range(1, max(m, 2)) if gcd(b, m) == 1]
    return [(SequenceSpec.exp_linear(a, b), m * m) for b in coprime_bs]


def coverage_conjecture(
    family: CoverageFamily | str,
    m_from: int,
    m_to: int,
    a: int = 2,
    sign: str = "minus",
    sieve_capacity: int = 50_000_000,
    binomial_capacity: int = 200_000,
) -> list[CoverageReport]:
    """One ``CoverageReport`` per (set, m) with the family's own bound as cap."""
    if m_from > m_to:
        raise PreconditionError(f"empty range [{m_from}, {m_to}]")
    reports: list[CoverageReport] = []
    for m in range(m_from, m_to + 1):
        for spec, bound in family_sets(family, m, a=a, sign=sign, sieve_capacity=sieve_capacity):
            reports.append(coverage_index(spec, m, bound, **_seq_kwargs(spec, sieve_capacity,
                                                                        binomial_capacity)))
    return reports


def _seq_kwargs(spec: SequenceSpec, sieve_capacity: int, binomial_capacity: int) -> dict[str, int]:
    if spec.kind in (SequenceKind.PRIME_MINUS_N, SequenceKind.N_TIMES_PRIME):
        return {"sieve_capacity": sieve_capacity}
    if spec.kind is SequenceKind.EXP_LINEAR:
        return {}
    return {"binomial_capacity": binomial_capacity}


def recount_cover(spec: SequenceSpec, m: int, index: int) -> Verdict:
    """Recount residues of exact terms: ``1..index`` covers and ``1..index-1`` does not."""
    hit: set[int] = set()
    for n in range(1, index + 1):
        if len(hit) == m:
            return Verdict(False, f"{spec.label} mod {m} already covered before {index}")
        hit.add(seq_term(spec, n) % m)
    if len(hit) != m:
        return Verdict(False, f"{spec.label} mod {m}: only {len(hit)} classes by {index}")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Checkers (parameter = m)
# ---------------------------------------------------------------------------


class _CoverageChecker(ConjectureChecker):
    family: ClassVar[CoverageFamily]
    parameter_name = "m"
    default_span = 30

    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        opts = self.options
        reports = coverage_conjecture(
            self.family, parameter, parameter, a=opts.a, sign=opts.sign,
            sieve_capacity=opts.sieve_capacity, binomial_capacity=opts.binomial_capacity,
        )
        sets = [
            {
                "sequence": r.spec.label,
                "spec": r.spec.to_dict(),
                "bound": r.cap,
                "first_cover_index": r.first_cover_index,
                "residues_missing": r.residues_missing,
            }
            for r in reports
        ]
        covered = all(r.covered for r in reports)
        status = RecordStatus.VERIFIED if covered else RecordStatus.COUNTEREXAMPLE
        return {"family": self.family.value, "sets": sets}, status, 0

    def replay(self, record: ConjectureRecord) -> Verdict:
        m = record.parameter
        expected = family_sets(self.family, m, a=self.options.a, sign=self.options.sign,
                               sieve_capacity=self.options.sieve_capacity)
        sets = record.witness.get("sets", [])
        if len(sets) != len(expected):
            return Verdict(False, f"expected {len(expected)} sets, record has {len(sets)}")
        for entry, (spec, bound) in zip(sets, expected, strict=True):
            if SequenceSpec.from_dict(entry["spec"]) != spec or entry["bound"] != bound:
                return Verdict(False, f"set {entry['sequence']} does not match the family")
            index = entry["first_cover_index"]
            if index is None or index > bound:
                return Verdict(False, f"{entry['sequence']}: index {index} exceeds bound {bound}")
            verdict = recount_cover(spec, m, index)
            if not verdict:
                return verdict
        return Verdict(True)


class ExpMinusNCoverageChecker(_CoverageChecker):
    """Id ``1.1`` for a fixed ``a`` (sign from options)."""

    conjecture_id = "1.1"
    family = CoverageFamily.C1_1


class PrimeCoverageChecker(_CoverageChecker):
    conjecture_id = "1.4i"
    family = CoverageFamily.C1_4I


class BinomialCoverageChecker(_CoverageChecker):
    conjecture_id = "1.5i"
    family = CoverageFamily.C1_5I
    default_span = 20


class ResidueSystemChecker(_CoverageChecker):
    """Id ``T1.1``: the residue-system theorem as a finite check over every b coprime to m."""

    conjecture_id = "T1.1"
    family = CoverageFamily.T1_1
    default_span = 40
