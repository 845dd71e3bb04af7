"""Tests for range runs: report files, checkpoints, resumption, replay, remarks, settings."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import replace
from pathlib import Path

import pandas as pd
import pytest
from pydantic import ValidationError

from anbn.config import Settings, load_settings
from anbn.conjectures import representation
from anbn.conjectures.schemas import CheckerOptions, ConjectureRecord, RecordStatus
from anbn.errors import CheckpointMismatchError, PreconditionError, ReportFormatError
from anbn.report import (
    RemarkRunner,
    RunConfig,
    RunEngine,
    config_digest,
    load_checkpoint,
    read_report,
    verify_report,
)
from anbn.report.remarks import RemarkCheck, available_kinds
from anbn.report.schemas import Checkpoint
from anbn.report.writer import ReportWriter, records_frame

REMARKS_PATH = Path(__file__).resolve().parents[1] / "checks" / "remarks.yaml"


def _identities(path: Path) -> Counter:
    _, records = read_report(path)
    return Counter(r.identity() for r in records)


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------


class TestRunConfig:
    def test_valid(self):
        cfg = RunConfig(command="conjecture", conjecture_id="1.3i", range_from=2, range_to=10)
        assert cfg.workers == 1
        assert cfg.format == "jsonl"

    def test_malformed_range(self):
        with pytest.raises(ValidationError, match="malformed range"):
            RunConfig(command="conjecture", conjecture_id="1.3i", range_from=10, range_to=2)

    def test_conjecture_needs_id(self):
        with pytest.raises(ValidationError):
            RunConfig(command="conjecture", range_from=1, range_to=2)

    def test_workers_positive(self):
        with pytest.raises(ValidationError):
            RunConfig(command="cover", workers=0)

    def test_unknown_format(self):
        with pytest.raises(ValidationError):
            RunConfig(command="cover", format="xml")


class TestConfigDigest:
    def test_stable(self, options):
        assert config_digest("1.3i", options) == config_digest("1.3i", replace(options))

    def test_changes_with_results_options(self, options):
        base = config_digest("1.3i", options)
        assert config_digest("1.3i", replace(options, prp_rounds=9)) != base
        assert config_digest("1.3ii", options) != base


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


class TestRunEngine:
    def test_writes_header_and_records(self, options, report_path):
        summary = RunEngine("1.1", options).run(1, 29, report_path)
        assert summary.total == 29
        assert summary.counts["verified"] == 29
        assert summary.exit_code == 0
        assert summary.last_parameter == 29

        header, records = read_report(report_path)
        assert header.tool == "anbn"
        assert header.conjecture_id == "1.1"
        assert header.seed == 7
        assert header.prp_rounds == 8
        assert header.config_digest == config_digest("1.1", options)
        assert [r.parameter for r in records] == list(range(1, 30))
        assert records[-1].witness["sets"][0]["first_cover_index"] == 195

    def test_report_replays(self, options, report_path):
        RunEngine("1.3i", options).run(2, 150, report_path)
        result = verify_report(report_path)
        assert result.ok
        assert result.total == result.passed == 149

    def test_tampered_report_fails_verification(self, options, report_path):
        RunEngine("1.3ii", options).run(4, 40, report_path)
        lines = report_path.read_text().splitlines()
        data = json.loads(lines[5])
        data["witness"]["1.3ii"]["p"] += 2
        lines[5] = json.dumps(data)
        report_path.write_text("\n".join(lines) + "\n")

        result = verify_report(report_path)
        assert not result.ok
        assert len(result.failures) == 1

    def test_header_digest_mismatch(self, options, report_path):
        RunEngine("1.1", options).run(1, 5, report_path)
        lines = report_path.read_text().splitlines()
        header = json.loads(lines[0])
        header["header"]["config_digest"] = "0" * 64
        lines[0] = json.dumps(header)
        report_path.write_text("\n".join(lines) + "\n")
        assert not verify_report(report_path).digest_ok

    def test_below_threshold(self, options, report_path):
        with pytest.raises(PreconditionError):
            RunEngine("1.8i", options).run(5, 20, report_path)

    def test_malformed_range(self, options, report_path):
        with pytest.raises(PreconditionError, match="malformed range"):
            RunEngine("1.3i", options).run(10, 2, report_path)

    def test_bad_worker_count(self, options):
        with pytest.raises(PreconditionError):
            RunEngine("1.3i", options, workers=0)

    def test_chunk_size_does_not_change_records(self, options, tmp_path):
        RunEngine("1.6ii", options, chunk_size=64).run(4, 150, tmp_path / "a.jsonl")
        RunEngine("1.6ii", options, chunk_size=7).run(4, 150, tmp_path / "b.jsonl")
        assert _identities(tmp_path / "a.jsonl") == _identities(tmp_path / "b.jsonl")

    def test_parallel_matches_serial(self, options, tmp_path):
        RunEngine("1.3i", options).run(2, 120, tmp_path / "serial.jsonl")
        RunEngine("1.3i", options, workers=2, chunk_size=16).run(2, 120, tmp_path / "par.jsonl")
        _, serial = read_report(tmp_path / "serial.jsonl")
        _, parallel = read_report(tmp_path / "par.jsonl")
        assert [r.identity() for r in serial] == [r.identity() for r in parallel]

    def test_counterexample_aborts(self, options, report_path, monkeypatch):
        monkeypatch.setattr(representation, "_is_small_prime", lambda p, opts: False)
        summary = RunEngine("1.3ii", options, chunk_size=16).run(4, 200, report_path)
        assert summary.aborted
        assert summary.exit_code == 2
        assert summary.counts["counterexample"] == 16
        _, records = read_report(report_path)
        assert len(records) == 16

    def test_csv_format(self, options, tmp_path):
        path = tmp_path / "run.csv"
        RunEngine("1.6iii", options).run(5, 30, path, fmt="csv")
        frame = pd.read_csv(path)
        assert list(frame["parameter"]) == list(range(5, 31))
        assert set(frame["status"]) == {"verified"}
        assert json.loads(frame["witness"].iloc[0]) == {
            "1.6iii": {"p": 2, "k": 1, "m": 1},
            "clause_status": {"1.6iii": "verified"},
        }


class TestResume:
    def test_resume_gives_same_records(self, options, tmp_path):
        full = tmp_path / "full.jsonl"
        RunEngine("1.3ii", options).run(4, 300, full)

        partial = tmp_path / "partial.jsonl"
        ckpt = tmp_path / "partial.ckpt.json"
        RunEngine("1.3ii", options).run(4, 131, partial, ckpt)
        assert load_checkpoint(ckpt).last_completed_parameter == 131

        # A killed run leaves records of the chunk in flight behind the checkpoint.
        stray = ConjectureRecord("1.3ii", 132, {"bogus": True}, RecordStatus.VERIFIED)
        with open(partial, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(stray.to_dict()) + "\n")

        summary = RunEngine("1.3ii", options).run(4, 300, partial, ckpt)
        assert summary.resumed_from == 132
        assert _identities(partial) == _identities(full)
        assert load_checkpoint(ckpt).last_completed_parameter == 300

    def test_digest_mismatch_refused(self, options, report_path, checkpoint_path):
        RunEngine("1.3ii", options).run(4, 50, report_path, checkpoint_path)
        with pytest.raises(CheckpointMismatchError):
            RunEngine("1.3ii", replace(options, prp_rounds=9)).run(
                4, 100, report_path, checkpoint_path
            )

    def test_other_conjecture_refused(self, options, report_path, checkpoint_path):
        RunEngine("1.3ii", options).run(4, 50, report_path, checkpoint_path)
        with pytest.raises(CheckpointMismatchError):
            RunEngine("1.6ii", options).run(4, 100, report_path, checkpoint_path)

    def test_checkpoint_without_report_starts_fresh(self, options, report_path, checkpoint_path):
        RunEngine("1.3ii", options).run(4, 50, report_path, checkpoint_path)
        report_path.unlink()
        summary = RunEngine("1.3ii", options).run(4, 60, report_path, checkpoint_path)
        assert summary.resumed_from is None
        assert summary.total == 57

    def test_resume_after_counterexample_keeps_exit_two(
        self, options, report_path, checkpoint_path, monkeypatch
    ):
        monkeypatch.setattr(representation, "_is_small_prime", lambda p, opts: False)
        first = RunEngine("1.3ii", options, chunk_size=16).run(
            4, 100, report_path, checkpoint_path
        )
        assert first.exit_code == 2
        assert load_checkpoint(checkpoint_path).last_completed_parameter == 19

        resumed = RunEngine("1.3ii", options, chunk_size=16).run(
            4, 100, report_path, checkpoint_path
        )
        assert resumed.aborted
        assert resumed.exit_code == 2
        assert resumed.counts["counterexample"] == 16
        _, records = read_report(report_path)
        assert max(r.parameter for r in records) == 19

    def test_resume_counts_kept_records(self, options, report_path, checkpoint_path, monkeypatch):
        monkeypatch.setattr(representation, "_is_small_prime", lambda p, opts: False)
        RunEngine("1.3ii", options, chunk_size=16).run(4, 100, report_path, checkpoint_path)
        monkeypatch.undo()

        resumed = RunEngine("1.3ii", options, chunk_size=16, stop_on_counterexample=False).run(
            4, 100, report_path, checkpoint_path
        )
        assert resumed.resumed_from == 20
        assert resumed.total == 97
        assert resumed.counts["counterexample"] == 16
        assert resumed.exit_code == 2

    def test_checkpoint_round_trip(self):
        cp = Checkpoint("1.3i", 99, "ab" * 32)
        assert Checkpoint.from_dict(cp.to_dict()) == cp


# ---------------------------------------------------------------------------
# Report files
# ---------------------------------------------------------------------------


class TestReportFiles:
    def test_malformed_line(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text('{"conjecture_id": "1.3i", "parameter": 2}\nnot json\n')
        with pytest.raises(ReportFormatError):
            read_report(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_report(tmp_path / "missing.jsonl")

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ReportFormatError):
            ReportWriter(tmp_path / "x.txt", "xml")

    def test_headerless_report_reads(self, tmp_path):
        path = tmp_path / "plain.jsonl"
        record = ConjectureRecord("1.3i", 2, {"1.3i-first": {"k": 1}}, RecordStatus.VERIFIED)
        path.write_text(json.dumps(record.to_dict()) + "\n\n")
        header, records = read_report(path)
        assert header is None
        assert records[0].identity() == record.identity()

    def test_records_frame(self):
        records = [
            ConjectureRecord("1.7i", m, {"cap": 10}, RecordStatus.VERIFIED) for m in (1, 2)
        ]
        frame = records_frame(records)
        assert list(frame.columns)[:2] == ["conjecture_id", "parameter"]
        assert list(frame["witness"]) == ['{"cap": 10}', '{"cap": 10}']


# ---------------------------------------------------------------------------
# Stated-value catalogue
# ---------------------------------------------------------------------------


class TestRemarks:
    def test_catalogue_passes(self, options):
        runner = RemarkRunner(options)
        checks = runner.load_checks(REMARKS_PATH)
        assert {c.kind for c in checks} <= set(available_kinds())

        results = runner.run(checks)
        failed = [(r.check_id, r.actual, r.error) for r in results if not r.passed]
        assert failed == []
        summary = runner.summary(results)
        assert summary["skipped"] == sum(1 for c in checks if c.long)
        assert summary["passed"] + summary["skipped"] == summary["total"]

    @pytest.mark.long
    def test_catalogue_giant_witnesses(self, options):
        runner = RemarkRunner(options)
        checks = [c for c in runner.load_checks(REMARKS_PATH) if c.long]
        assert checks
        results = runner.run(checks, include_long=True)
        assert [r.check_id for r in results if not r.passed] == []

    def test_load_directory(self, tmp_path):
        (tmp_path / "a.yaml").write_text(
            "checks:\n  - id: p10\n    kind: nth_prime\n    params: {n: 10}\n    expected: 29\n"
        )
        (tmp_path / "b.yml").write_text(
            "- kind: witness_n\n  params: {a: 3, b: 1, m: 4, r: 2}\n  expected: 3\n"
        )
        runner = RemarkRunner()
        checks = runner.load_checks(tmp_path)
        assert [c.id for c in checks] == ["p10", "b_0"]
        assert all(r.passed for r in runner.run(checks))

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("checks:\n  - id: x\n    kind: astrology\n")
        with pytest.raises(ValueError, match="unknown check kind"):
            RemarkRunner().load_checks(path)

    def test_missing_path(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            RemarkRunner().load_checks(tmp_path / "nope")

    def test_wrong_expectation_fails(self):
        check = RemarkCheck(id="wrong", kind="nth_prime", params={"n": 10}, expected=31)
        result = RemarkRunner().run_one(check)
        assert not result.passed
        assert result.actual == 29

    def test_error_is_reported(self):
        check = RemarkCheck(id="err", kind="prime_bound", params={}, expected=1)
        result = RemarkRunner().run_one(check)
        assert not result.passed
        assert result.error.startswith("KeyError")

    def test_long_check_skipped_by_default(self):
        check = RemarkCheck(id="slow", kind="nth_prime", params={"n": 5}, expected=11, long=True)
        runner = RemarkRunner()
        assert runner.run_one(check).skipped
        assert runner.run_one(check, include_long=True).passed


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------


class TestSettings:
    def test_defaults(self):
        settings = Settings()
        assert settings.harness.chunk_size == 64
        assert settings.arith.prp_rounds == 32

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("harness:\n  workers: 3\n  desk_max_k: 100\n")
        settings = load_settings(path)
        assert settings.harness.workers == 3
        assert settings.harness.desk_max_k == 100
        assert settings.sequences.partition_capacity == 20_000

    def test_env_overrides_yaml(self, tmp_path, monkeypatch):
        path = tmp_path / "settings.yaml"
        path.write_text("arith:\n  prp_rounds: 16\n")
        monkeypatch.setenv("ANBN_ARITH__PRP_ROUNDS", "40")
        assert load_settings(path).arith.prp_rounds == 40

    def test_options_from_settings(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("harness:\n  seed: 11\n  totient_reading: sum\n")
        opts = CheckerOptions.from_settings(load_settings(path), prp_rounds=5, a=None)
        assert opts.seed == 11
        assert opts.totient_reading == "sum"
        assert opts.prp_rounds == 5
        assert opts.a == 2
