"""Report files: canonical JSON lines plus a lossy CSV projection via pandas."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Literal

import pandas as pd

from anbn.conjectures.schemas import ConjectureRecord
from anbn.errors import ReportFormatError
from anbn.report.schemas import ReportHeader

logger = logging.getLogger(__name__)

ReportFormat = Literal["jsonl", "csv"]

CSV_COLUMNS = ["conjecture_id", "parameter", "witness", "status", "elapsed_ms", "prp_rounds"]


class ReportWriter:
    """Single writer for one report file; every call flushes before returning."""

    def __init__(self, path: str | Path, fmt: ReportFormat = "jsonl"):
        if fmt not in ("jsonl", "csv"):
            raise ReportFormatError(f"unknown report format '{fmt}'")
        self.path = Path(path)
        self.fmt = fmt
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def start(self, header: ReportHeader) -> None:
        """Begin a fresh report (truncates)."""
        if self.fmt == "jsonl":
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(json.dumps({"header": header.to_dict()}) + "\n")
        else:
            pd.DataFrame(columns=CSV_COLUMNS).to_csv(self.path, index=False)

    def append(self, records: list[ConjectureRecord]) -> None:
        if not records:
            return
        if self.fmt == "jsonl":
            with open(self.path, "a", encoding="utf-8") as fh:
                for record in records:
                    fh.write(json.dumps(record.to_dict()) + "\n")
                fh.flush()
            return

        rows = [record.to_dict() for record in records]
        for row in rows:
            row["witness"] = json.dumps(row["witness"], sort_keys=True)
        pd.DataFrame(rows, columns=CSV_COLUMNS).to_csv(
            self.path, mode="a", header=False, index=False
        )

    def truncate_after(self, last_parameter: int) -> list[str]:
        """Drop records past ``last_parameter`` (an in-flight chunk of a killed run).

        Returns the statuses of the records that were kept.
        """
        if not self.path.exists():
            return []
        if self.fmt == "jsonl":
            header, records = read_report(self.path)
            kept = [r for r in records if r.parameter <= last_parameter]
            with open(self.path, "w", encoding="utf-8") as fh:
                if header is not None:
                    fh.write(json.dumps({"header": header.to_dict()}) + "\n")
                for record in kept:
                    fh.write(json.dumps(record.to_dict()) + "\n")
            dropped = len(records) - len(kept)
            statuses = [r.status.value for r in kept]
        else:
            frame = pd.read_csv(self.path)
            kept_frame = frame[frame["parameter"] <= last_parameter]
            kept_frame.to_csv(self.path, index=False)
            dropped = len(frame) - len(kept_frame)
            statuses = kept_frame["status"].astype(str).tolist()
        if dropped:
            logger.warning("Dropped %d records past checkpoint %d", dropped, last_parameter)
        return statuses


def read_report(path: str | Path) -> tuple[ReportHeader | None, list[ConjectureRecord]]:
    """Parse a JSON-lines report.

    Raises:
        ReportFormatError: A line is not JSON or lacks a record field.
    """
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"Report not found: {path}")

    header: ReportHeader | None = None
    records: list[ConjectureRecord] = []
    with open(p, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                if "header" in data:
                    header = ReportHeader.from_dict(data["header"])
                else:
                    records.append(ConjectureRecord.from_dict(data))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ReportFormatError(f"{p}:{lineno}: malformed report line ({exc})") from exc
    return header, records


def records_frame(records: list[ConjectureRecord]) -> pd.DataFrame:
    """Tabular view for summaries: one row per record, witness JSON-encoded."""
    rows = [r.to_dict() for r in records]
    for row in rows:
        row["witness"] = json.dumps(row["witness"], sort_keys=True)
    return pd.DataFrame(rows, columns=CSV_COLUMNS)
