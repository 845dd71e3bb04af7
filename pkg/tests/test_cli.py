"""Tests for the CLI: output contracts and exit codes."""

from __future__ import annotations

import json
from pathlib import Path

from typer.testing import CliRunner

from anbn.conjectures import representation
from cli.main import app, run

runner = CliRunner()

REMARKS_PATH = Path(__file__).resolve().parents[1] / "checks" / "remarks.yaml"


def _last_json_line(text: str) -> dict:
    return json.loads(text.strip().splitlines()[-1])


class TestWitnessCommand:
    def test_prints_verified_certificate(self):
        result = runner.invoke(app, ["witness", "--a", "2", "--b", "-1", "--m", "29", "--r", "7"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["verification"] is True
        cert = payload["certificate"]
        assert 1 <= cert["n"] <= 29 * 29
        assert (pow(2, cert["n"], 29) - cert["n"] - 7) % 29 == 0

    def test_verify_json_round_trip(self, tmp_path):
        first = runner.invoke(app, ["witness", "--a", "6", "--b", "5", "--m", "36", "--r", "1"])
        path = tmp_path / "cert.json"
        path.write_text(first.stdout)
        result = runner.invoke(app, ["witness", "--verify-json", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["verification"] is True

    def test_tampered_certificate_exits_one(self, tmp_path):
        first = runner.invoke(app, ["witness", "--a", "3", "--b", "1", "--m", "35", "--r", "4"])
        data = json.loads(first.stdout)
        data["certificate"]["n"] += 1
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(data))
        result = runner.invoke(app, ["witness", "--verify-json", str(path)])
        assert result.exit_code == 1
        assert "\"verification\": false" in result.output

    def test_b_not_coprime_exits_one(self):
        result = runner.invoke(app, ["witness", "--a", "2", "--b", "2", "--m", "4", "--r", "1"])
        assert result.exit_code == 1
        assert "not coprime" in result.output


class TestCoverCommand:
    def test_index(self):
        result = runner.invoke(app, ["cover", "--seq", "explinear", "--a", "1", "--b", "1",
                                     "--m", "5"])
        assert result.exit_code == 0
        assert "index 5" in result.output

    def test_exp_minus_n_mod_29(self):
        result = runner.invoke(app, ["cover", "--seq", "explinear", "--a", "2", "--b", "-1",
                                     "--m", "29", "--cap", "215"])
        assert "index 195" in result.output

    def test_not_covered(self):
        result = runner.invoke(app, ["cover", "--seq", "explinear", "--a", "2", "--b", "0",
                                     "--m", "4"])
        assert result.exit_code == 0
        assert "not covered" in result.output

    def test_unknown_sequence(self):
        result = runner.invoke(app, ["cover", "--seq", "fibonacci", "--m", "4"])
        assert result.exit_code == 1


class TestSeqCommands:
    def test_eval_mod(self):
        result = runner.invoke(app, ["seq", "eval", "q", "--from", "8400", "--to", "8400",
                                     "--mod", "42"])
        assert result.exit_code == 0
        assert "31" in result.output

    def test_eval_named_sequence(self):
        result = runner.invoke(app, ["seq", "eval", "n-times-prime", "--from", "3"])
        assert result.exit_code == 0
        assert "15" in result.output

    def test_hr(self):
        result = runner.invoke(app, ["seq", "hr", "--kind", "q", "--from", "100", "--to", "300"])
        assert result.exit_code == 0
        assert "300" in result.output


class TestConjectureCommand:
    def test_exp_minus_n_range(self, tmp_path):
        out = tmp_path / "c11.jsonl"
        result = runner.invoke(app, ["conjecture", "--id", "1.1", "--a", "2", "--sign", "minus",
                                     "--m-from", "1", "--m-to", "29", "--out", str(out)])
        assert result.exit_code == 0, result.output
        last = _last_json_line(result.stdout)
        assert last["parameter"] == 29
        assert last["witness"]["sets"][0]["first_cover_index"] == 195

        replayed = runner.invoke(app, ["verify-report", str(out)])
        assert replayed.exit_code == 0
        assert "29/29" in replayed.output

    def test_unknown_id(self, tmp_path):
        result = runner.invoke(app, ["conjecture", "--id", "9.9", "--out",
                                     str(tmp_path / "x.jsonl")])
        assert result.exit_code == 1
        assert "Unknown conjecture" in result.output

    def test_malformed_range(self, tmp_path):
        result = runner.invoke(app, ["conjecture", "--id", "1.3i", "--from", "10", "--to", "2",
                                     "--out", str(tmp_path / "x.jsonl")])
        assert result.exit_code == 1
        assert "malformed range" in result.output

    def test_bad_sign(self, tmp_path):
        result = runner.invoke(app, ["conjecture", "--id", "1.1", "--sign", "sideways",
                                     "--out", str(tmp_path / "x.jsonl")])
        assert result.exit_code == 1

    def test_checkpoint_mismatch_exits_one(self, tmp_path):
        args = ["conjecture", "--id", "1.3ii", "--n-from", "4", "--n-to", "40",
                "--out", str(tmp_path / "r.jsonl"), "--checkpoint", str(tmp_path / "r.ckpt")]
        assert runner.invoke(app, [*args, "--prp-rounds", "8"]).exit_code == 0
        result = runner.invoke(app, [*args, "--prp-rounds", "9"])
        assert result.exit_code == 1
        assert "refusing" in result.output

    def test_csv_report(self, tmp_path):
        out = tmp_path / "r.csv"
        result = runner.invoke(app, ["conjecture", "--id", "1.7i", "--m-from", "1",
                                     "--m-to", "6", "--format", "csv", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text().splitlines()[0].startswith("conjecture_id,parameter")


class TestVerifyReportCommand:
    def test_tampered_report_exits_one(self, tmp_path):
        out = tmp_path / "r.jsonl"
        runner.invoke(app, ["conjecture", "--id", "1.3i", "--n-from", "2", "--n-to", "20",
                            "--out", str(out)])
        lines = out.read_text().splitlines()
        record = json.loads(lines[3])
        record["witness"]["1.3i-first"]["k"] += 1
        lines[3] = json.dumps(record)
        out.write_text("\n".join(lines) + "\n")

        result = runner.invoke(app, ["verify-report", str(out)])
        assert result.exit_code == 1
        assert "18/19" in result.output

    def test_missing_report(self, tmp_path):
        result = runner.invoke(app, ["verify-report", str(tmp_path / "none.jsonl")])
        assert result.exit_code == 1


class TestRemarksAndStatus:
    def test_remarks(self):
        result = runner.invoke(app, ["remarks", str(REMARKS_PATH)])
        assert result.exit_code == 0, result.output
        assert "0 failed" in result.output

    def test_remarks_default_path(self, monkeypatch):
        monkeypatch.chdir(REMARKS_PATH.parents[1])
        result = runner.invoke(app, ["remarks"])
        assert result.exit_code == 0, result.output
        assert "0 failed" in result.output

    def test_status(self):
        result = runner.invoke(app, ["status"])
        assert result.exit_code == 0
        assert "1.3i" in result.output
        assert "explinear" in result.output


class TestRunExitCodes:
    def test_success(self):
        assert run(["cover", "--seq", "explinear", "--a", "1", "--b", "1", "--m", "5"]) == 0

    def test_error(self):
        assert run(["conjecture", "--id", "9.9"]) == 1

    def test_usage_error_maps_to_one(self):
        assert run(["cover", "--m", "not-a-number", "--seq", "explinear"]) == 1

    def test_missing_witness_options(self):
        assert run(["witness", "--a", "2"]) == 1

    def test_missing_required_option(self):
        assert run(["cover", "--m", "5"]) == 1

    def test_unknown_command(self):
        assert run(["factor-everything"]) == 1

    def test_resume_after_counterexample_exits_two(self, tmp_path, monkeypatch):
        monkeypatch.setattr(representation, "_is_small_prime", lambda p, opts: False)
        args = ["conjecture", "--id", "1.3ii", "--n-from", "4", "--n-to", "200",
                "--workers", "1", "--out", str(tmp_path / "r.jsonl"),
                "--checkpoint", str(tmp_path / "r.ckpt")]
        assert run(args) == 2
        assert run(args) == 2

    def test_counterexample_exits_two(self, tmp_path, monkeypatch):
        monkeypatch.setattr(representation, "_is_small_prime", lambda p, opts: False)
        code = run(["conjecture", "--id", "1.3ii", "--n-from", "4", "--n-to", "10",
                    "--workers", "1", "--out", str(tmp_path / "r.jsonl")])
        assert code == 2
