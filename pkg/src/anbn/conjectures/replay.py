"""Record replay: re-validate a stored record without trusting its search."""

from __future__ import annotations

import logging
import random

from anbn.conjectures.factory import get_checker
from anbn.conjectures.representation import RepresentationChecker
from anbn.conjectures.schemas import CheckerOptions, ConjectureRecord, RecordStatus
from anbn.errors import AnbnError
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)


def replay_record(record: ConjectureRecord, options: CheckerOptions | None = None) -> Verdict:
    """Verified records replay their witness; other statuses are re-run and compared.

    Never raises on bad input: errors become a failing ``Verdict``.
    """
    try:
        checker = get_checker(record.conjecture_id, options or CheckerOptions())
        if record.status is RecordStatus.VERIFIED:
            return checker.replay(record)
        return checker.recheck(record)
    except (AnbnError, KeyError, TypeError, ValueError) as exc:
        logger.debug("Replay of %s at %d failed: %s", record.conjecture_id, record.parameter, exc)
        return Verdict(False, f"{type(exc).__name__}: {exc}")


def spot_check_minimality(
    records: list[ConjectureRecord],
    options: CheckerOptions | None = None,
    fraction: float = 0.01,
    seed: int = 0,
) -> list[tuple[ConjectureRecord, Verdict]]:
    """Rescan earlier candidates for a random sample of verified representation records."""
    opts = options or CheckerOptions()
    eligible = [r for r in records if r.status is RecordStatus.VERIFIED]
    if not eligible:
        return []
    count = max(1, round(len(eligible) * fraction))
    sample = random.Random(seed).sample(eligible, min(count, len(eligible)))

    results = []
    for record in sample:
        checker = get_checker(record.conjecture_id, opts)
        if isinstance(checker, RepresentationChecker):
            results.append((record, checker.rescan(record)))
    return results
