"""Replay a whole report through the independent record checks."""

from __future__ import annotations

import logging
from pathlib import Path

from anbn.conjectures.replay import replay_record
from anbn.conjectures.schemas import CheckerOptions
from anbn.report.checkpoint import config_digest
from anbn.report.schemas import ReportVerification
from anbn.report.writer import read_report

logger = logging.getLogger(__name__)


def verify_report(path: str | Path, options: CheckerOptions | None = None) -> ReportVerification:
    """Re-validate every record of a JSON-lines report.

    Options come from the report header when present, so a report replays
    under the configuration that produced it; ``options`` overrides that.
    """
    header, records = read_report(path)
    result = ReportVerification()

    if options is None and header is not None and header.options:
        options = CheckerOptions(**header.options)
    options = options or CheckerOptions()

    if header is not None:
        digest = config_digest(header.conjecture_id, options)
        if digest != header.config_digest:
            result.digest_ok = False
            logger.warning("Report %s: header digest does not match its options", path)

    for record in records:
        result.total += 1
        verdict = replay_record(record, options)
        if verdict:
            result.passed += 1
        else:
            result.failures.append((record, verdict.reason))
            logger.warning("Replay failed for %s at %d: %s", record.conjecture_id,
                           record.parameter, verdict.reason)

    logger.info("Verified %d/%d records from %s", result.passed, result.total, path)
    return result
