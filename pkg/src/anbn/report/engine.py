"""Checkpointed range runs: chunked dispatch, ordered emission, resumable."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from datetime import UTC, datetime
from itertools import repeat
from pathlib import Path
from typing import Any

from anbn import __version__
from anbn.conjectures.factory import get_checker
from anbn.conjectures.schemas import CheckerOptions, ConjectureRecord, RecordStatus
from anbn.errors import PreconditionError
from anbn.report.checkpoint import (
    config_digest,
    ensure_resumable,
    load_checkpoint,
    save_checkpoint,
)
from anbn.report.schemas import Checkpoint, ReportHeader, RunSummary
from anbn.report.writer import ReportFormat, ReportWriter

logger = logging.getLogger(__name__)

TOOL_NAME = "anbn"


def _check_chunk(
    conjecture_id: str, options: dict[str, Any], parameters: list[int]
) -> list[dict[str, Any]]:
    """Worker entry point (module level so it pickles)."""
    checker = get_checker(conjecture_id, CheckerOptions(**options))
    return [checker.check(p).to_dict() for p in parameters]


class RunEngine:
    """Run one conjecture checker over a parameter range into a report file.

    Records are written in ascending parameter order one chunk at a time and
    the checkpoint advances after each chunk, so a kill loses at most the
    chunk in flight.
    """

    def __init__(
        self,
        conjecture_id: str,
        options: CheckerOptions | None = None,
        workers: int = 1,
        chunk_size: int = 64,
        stop_on_counterexample: bool = True,
    ):
        if workers < 1 or chunk_size < 1:
            raise PreconditionError(f"workers and chunk_size must be >= 1, got {workers}, "
                                    f"{chunk_size}")
        self.options = options or CheckerOptions()
        self.checker = get_checker(conjecture_id, self.options)
        self.conjecture_id = conjecture_id
        self.workers = workers
        self.chunk_size = chunk_size
        self.stop_on_counterexample = stop_on_counterexample
        self.digest = config_digest(conjecture_id, self.options)

    def header(self) -> ReportHeader:
        return ReportHeader(
            tool=TOOL_NAME,
            version=__version__,
            seed=self.options.seed,
            config_digest=self.digest,
            timestamp=datetime.now(UTC).isoformat(timespec="seconds"),
            prp_rounds=self.options.prp_rounds,
            conjecture_id=self.conjecture_id,
            options=self.options.result_fields(),
        )

    def run(
        self,
        range_from: int,
        range_to: int,
        out_path: str | Path,
        checkpoint_path: str | Path | None = None,
        fmt: ReportFormat = "jsonl",
    ) -> RunSummary:
        """Check every parameter in ``[range_from, range_to]``.

        Raises:
            PreconditionError: Malformed range or a start below the threshold.
            CheckpointMismatchError: The checkpoint belongs to another configuration.
        """
        if range_from > range_to:
            raise PreconditionError(f"malformed range: from {range_from} > to {range_to}")
        if range_from < self.checker.threshold:
            raise PreconditionError(
                f"{self.conjecture_id} starts at {self.checker.parameter_name}="
                f"{self.checker.threshold}, got {range_from}"
            )

        summary = RunSummary(self.conjecture_id, range_from, range_to)
        writer = ReportWriter(out_path, fmt)
        start = range_from

        checkpoint = load_checkpoint(checkpoint_path) if checkpoint_path else None
        if checkpoint is not None and writer.path.exists():
            ensure_resumable(checkpoint, self.conjecture_id, self.digest)
            start = max(range_from, checkpoint.last_completed_parameter + 1)
            kept = writer.truncate_after(checkpoint.last_completed_parameter)
            summary.restore(kept, checkpoint.last_completed_parameter)
            summary.resumed_from = start
            if self.stop_on_counterexample and summary.counts[RecordStatus.COUNTEREXAMPLE.value]:
                logger.error("%s report already holds a counterexample; not resuming",
                             self.conjecture_id)
                summary.aborted = True
                return summary
            logger.warning("Resuming %s at %s=%d", self.conjecture_id,
                           self.checker.parameter_name, start)
        else:
            writer.start(self.header())

        chunks = [
            list(range(lo, min(lo + self.chunk_size, range_to + 1)))
            for lo in range(start, range_to + 1, self.chunk_size)
        ]
        logger.info("Running %s over [%d, %d] in %d chunks (%d workers)",
                    self.conjecture_id, start, range_to, len(chunks), self.workers)

        for records in self._iter_chunks(chunks):
            writer.append(records)
            for record in records:
                summary.add(record)
            if checkpoint_path:
                save_checkpoint(
                    checkpoint_path,
                    Checkpoint(self.conjecture_id, records[-1].parameter, self.digest),
                )
            bad = [r for r in records if r.status is RecordStatus.COUNTEREXAMPLE]
            if bad and self.stop_on_counterexample:
                logger.error("COUNTEREXAMPLE to %s at %s=%d; aborting run", self.conjecture_id,
                             self.checker.parameter_name, bad[0].parameter)
                summary.aborted = True
                break

        logger.info("%s: %d records %s", self.conjecture_id, summary.total, dict(summary.counts))
        return summary

    def _iter_chunks(self, chunks: list[list[int]]) -> Iterator[list[ConjectureRecord]]:
        """Yield each chunk's records in chunk order regardless of completion order."""
        if self.workers == 1 or len(chunks) <= 1:
            for chunk in chunks:
                yield [self.checker.check(p) for p in chunk]
            return

        pool = ProcessPoolExecutor(max_workers=self.workers)
        try:
            results = pool.map(
                _check_chunk,
                repeat(self.conjecture_id),
                repeat(self.options.result_fields()),
                chunks,
            )
            for dicts in results:
                yield [ConjectureRecord.from_dict(d) for d in dicts]
        finally:
            pool.shutdown(wait=True, cancel_futures=True)
