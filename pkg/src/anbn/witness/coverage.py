"""Coverage engine: does a prefix of a sequence form a complete residue system?"""

from __future__ import annotations

import logging
from math import gcd

from anbn.errors import PreconditionError
from anbn.sequences.factory import get_sequence
from anbn.sequences.schemas import SequenceSpec
from anbn.witness.schemas import CoverageReport

logger = logging.getLogger(__name__)


def coverage_index(spec: SequenceSpec, m: int, cap: int, **seq_kwargs) -> CoverageReport:
    """Scan terms ``1..cap`` of ``spec`` mod ``m`` until every class is hit.

    Args:
        spec: Sequence to scan.
        m: Modulus (``>= 1``).
        cap: Scan limit (``>= m``; a shorter prefix cannot cover).
        **seq_kwargs: Capacities forwarded to the sequence constructor.

    Returns:
        A ``CoverageReport``; ``first_cover_index`` is the least covering prefix.
    """
    if m < 1:
        raise PreconditionError(f"modulus must be >= 1, got {m}")
    if cap < m:
        raise PreconditionError(f"cap {cap} < m {m}: a prefix shorter than m cannot cover")

    sequence = get_sequence(spec, **seq_kwargs)
    seen = bytearray(m)
    hit = 0
    for index, residue in enumerate(sequence.iter_mod(m, cap), start=1):
        if not seen[residue]:
            seen[residue] = 1
            hit += 1
            if hit == m:
                return CoverageReport(
                    spec=spec, m=m, covered=True, cap=cap, first_cover_index=index
                )

    missing = [residue for residue in range(m) if not seen[residue]]
    logger.info("%s mod %d: %d residues missing within %d terms", spec.label, m, len(missing), cap)
    return CoverageReport(spec=spec, m=m, covered=False, cap=cap, residues_missing=missing)


def residue_system_check(a: int, b: int, m: int) -> CoverageReport:
    """``{a**n + b*n : n = 1..m**2}`` against a complete residue system mod ``m``."""
    if gcd(b, m) != 1:
        raise PreconditionError(f"b={b} is not coprime to m={m}")
    return coverage_index(SequenceSpec.exp_linear(a, b), m, m * m)
