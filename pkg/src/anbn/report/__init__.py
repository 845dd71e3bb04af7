"""Report layer: range engine, writers, checkpoints, replay and the value catalogue."""

from anbn.report.checkpoint import config_digest, load_checkpoint, save_checkpoint
from anbn.report.engine import RunEngine
from anbn.report.remarks import RemarkCheck, RemarkResult, RemarkRunner
from anbn.report.schemas import Checkpoint, ReportHeader, RunConfig, RunSummary
from anbn.report.verify import verify_report
from anbn.report.writer import ReportWriter, read_report

__all__ = [
    "Checkpoint",
    "RemarkCheck",
    "RemarkResult",
    "RemarkRunner",
    "ReportHeader",
    "ReportWriter",
    "RunConfig",
    "RunEngine",
    "RunSummary",
    "config_digest",
    "load_checkpoint",
    "read_report",
    "save_checkpoint",
    "verify_report",
]
