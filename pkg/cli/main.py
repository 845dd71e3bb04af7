"""CLI entry point: Typer app for anbn commands.

Usage:
    anbn witness --a 2 --b -1 --m 29 --r 7
    anbn cover --seq explinear --a 2 --b -1 --m 29
    anbn seq eval q --from 8400 --to 8400 --mod 42
    anbn conjecture --id 1.1 --a 2 --sign minus --m-from 1 --m-to 29
    anbn verify-report local_data/reports/1.1_1_29.jsonl
    anbn remarks checks/remarks.yaml
    anbn status
"""

from __future__ import annotations

import json
import logging
import sys
from contextlib import contextmanager
from functools import partial
from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from anbn import __version__
from anbn.errors import AnbnError

app = typer.Typer(
    name="anbn",
    help="Residues of a^n + bn mod m: witnesses, coverage, conjecture checks.",
    no_args_is_help=True,
)
seq_app = typer.Typer(help="Exact sequence values and asymptotics.", no_args_is_help=True)
app.add_typer(seq_app, name="seq")

console = Console()
err_console = Console(stderr=True)

_REPORT_PATH = typer.Argument(..., help="JSON-lines report to replay")
_CHECKS_PATH = typer.Argument(help="Check YAML file or directory")


@contextmanager
def _fail_on_error():
    """Turn library errors into a one-line message and exit code 1."""
    try:
        yield
    except (AnbnError, ValueError, FileNotFoundError) as exc:
        err_console.print(f"[bold red]Error:[/] {escape(str(exc))}", soft_wrap=True)
        raise typer.Exit(code=1) from exc


def _settings():
    from anbn.config import load_settings

    return load_settings()


@app.callback()
def _configure(
    log_level: str = typer.Option("WARNING", "--log-level", help="Logging level"),
) -> None:
    logging.basicConfig(
        level=log_level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


# ---------------------------------------------------------------------------
# witness / cover
# ---------------------------------------------------------------------------


@app.command()
def witness(
    a: int | None = typer.Option(None, "--a", help="Base a"),
    b: int | None = typer.Option(None, "--b", help="Coefficient b (coprime to m)"),
    m: int | None = typer.Option(None, "--m", help="Modulus"),
    r: int | None = typer.Option(None, "--r", help="Target residue"),
    verify_json: Path | None = typer.Option(
        None, "--verify-json", help="Verify a certificate JSON file instead",
    ),
) -> None:
    """Construct (and self-verify) n with a^n + bn ≡ r (mod m)."""
    from anbn.witness.construct import witness as build_witness
    from anbn.witness.schemas import WitnessCertificate, WitnessQuery
    from anbn.witness.verify import verify_certificate

    settings = _settings()
    with _fail_on_error():
        if verify_json is not None:
            with open(verify_json, encoding="utf-8") as fh:
                data = json.load(fh)
            cert = WitnessCertificate.from_dict(data.get("certificate", data))
        else:
            if None in (a, b, m, r):
                raise typer.BadParameter("--a, --b, --m and --r are required")
            cert = build_witness(WitnessQuery(a, b, m, r), settings.arith.factor_bound)
        verdict = verify_certificate(cert, settings.arith.factor_bound)

    payload = {"certificate": cert.to_dict(), "verification": verdict.ok}
    if not verdict.ok:
        payload["reason"] = verdict.reason
    typer.echo(json.dumps(payload, indent=2))
    if not verdict.ok:
        raise typer.Exit(code=1)


@app.command()
def cover(
    seq: str = typer.Option(..., "--seq", help="Sequence name (see `anbn status`)"),
    m: int = typer.Option(..., "--m", help="Modulus"),
    a: int | None = typer.Option(None, "--a", help="explinear base"),
    b: int | None = typer.Option(None, "--b", help="explinear coefficient"),
    cap: int | None = typer.Option(None, "--cap", help="Scan limit (default m^2)"),
) -> None:
    """Least prefix of a sequence that covers every residue mod m."""
    from anbn.sequences.schemas import SequenceSpec
    from anbn.witness.coverage import coverage_index

    with _fail_on_error():
        spec = SequenceSpec.parse(seq, a=a, b=b)
        report = coverage_index(spec, m, cap if cap is not None else max(m * m, m))

    if report.covered:
        console.print(
            f"[bold green]{spec.label}[/] mod {m}: index [bold]{report.first_cover_index}[/]"
        )
    else:
        console.print(
            f"[yellow]{spec.label}[/] mod {m}: not covered within {report.cap} "
            f"(missing {report.residues_missing[:20]})"
        )


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------


_SCALAR_SEQUENCES = ("p", "q", "bell", "binom", "catalan")


@seq_app.command("eval")
def seq_eval(
    name: str = typer.Argument(..., help="p, q, bell, binom, catalan or a coverage sequence"),
    n_from: int = typer.Option(1, "--from", help="First index"),
    n_to: int | None = typer.Option(None, "--to", help="Last index (default: --from)"),
    a: int | None = typer.Option(None, "--a", help="explinear base"),
    b: int | None = typer.Option(None, "--b", help="explinear coefficient"),
    mod: int | None = typer.Option(None, "--mod", help="Reduce values mod this"),
) -> None:
    """Print exact sequence values."""
    from anbn.sequences.bell import bell
    from anbn.sequences.binomial import catalan, central_binomial
    from anbn.sequences.factory import seq_term
    from anbn.sequences.partitions import partition_p, strict_partition_q
    from anbn.sequences.schemas import SequenceSpec

    sq = _settings().sequences
    scalar = {
        "p": lambda n: partition_p(n, sq.partition_capacity),
        "q": lambda n: strict_partition_q(n, sq.partition_capacity),
        "bell": lambda n: bell(n, sq.bell_capacity),
        "binom": lambda n: central_binomial(n, sq.binomial_capacity),
        "catalan": lambda n: catalan(n, sq.binomial_capacity),
    }

    table = Table(title=name)
    table.add_column("n", style="cyan", justify="right")
    table.add_column("value" if mod is None else f"value mod {mod}", justify="right")

    with _fail_on_error():
        if name in _SCALAR_SEQUENCES:
            term = scalar[name]
        else:
            spec = SequenceSpec.parse(name, a=a, b=b)
            term = partial(seq_term, spec)
        for n in range(n_from, (n_to if n_to is not None else n_from) + 1):
            value = term(n)
            table.add_row(str(n), str(value if mod is None else value % mod))

    console.print(table)


@seq_app.command("hr")
def seq_hr(
    kind: str = typer.Option("p", "--kind", help="p or q"),
    n_from: int = typer.Option(100, "--from", help="First n"),
    n_to: int = typer.Option(2000, "--to", help="Last n"),
    step: int = typer.Option(100, "--step", help="Stride"),
) -> None:
    """Hardy–Ramanujan estimate / exact value."""
    from anbn.sequences.asymptotic import hardy_ramanujan_ratio

    capacity = _settings().sequences.partition_capacity
    table = Table(title=f"Hardy–Ramanujan ratio for {kind}(n)")
    table.add_column("n", style="cyan", justify="right")
    table.add_column("estimate / exact", justify="right")

    with _fail_on_error():
        for n in range(n_from, n_to + 1, step):
            table.add_row(str(n), f"{hardy_ramanujan_ratio(n, kind, capacity):.6f}")

    console.print(table)


# ---------------------------------------------------------------------------
# conjecture / verify-report / remarks
# ---------------------------------------------------------------------------


@app.command()
def conjecture(
    conjecture_id: str = typer.Option(..., "--id", help="Conjecture id (see `anbn status`)"),
    range_from: int | None = typer.Option(
        None, "--from", "--m-from", "--n-from", "--x-from", help="First parameter",
    ),
    range_to: int | None = typer.Option(
        None, "--to", "--m-to", "--n-to", "--x-to", help="Last parameter",
    ),
    a: int = typer.Option(2, "--a", help="Base for 1.1 and T1.1"),
    sign: str = typer.Option("minus", "--sign", help="1.1 variant: minus, plus or both"),
    long_mode: bool = typer.Option(False, "--long", help="Lift desk-scale search limits"),
    prp_rounds: int | None = typer.Option(None, "--prp-rounds", help="Random PRP rounds"),
    seed: int | None = typer.Option(None, "--seed", help="Run seed"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Worker processes"),
    totient_reading: str | None = typer.Option(
        None, "--totient-reading", help="1.8 exponent reading: strict or sum",
    ),
    out: Path | None = typer.Option(None, "--out", "-o", help="Report path"),
    checkpoint: Path | None = typer.Option(None, "--checkpoint", help="Checkpoint path"),
    fmt: str | None = typer.Option(None, "--format", help="jsonl or csv"),
) -> None:
    """Check a conjecture over a parameter range into a report."""
    from anbn.conjectures.factory import get_checker
    from anbn.conjectures.schemas import CheckerOptions
    from anbn.report.engine import RunEngine
    from anbn.report.schemas import RunConfig

    settings = _settings()
    with _fail_on_error():
        options = CheckerOptions.from_settings(
            settings, a=a, sign=sign, long_mode=long_mode or None, prp_rounds=prp_rounds,
            seed=seed, totient_reading=totient_reading,
        )
        lo, hi = get_checker(conjecture_id, options).default_range()
        fmt = fmt or settings.report.format
        range_from = range_from if range_from is not None else lo
        range_to = range_to if range_to is not None else max(hi, range_from)
        config = RunConfig(
            command="conjecture",
            conjecture_id=conjecture_id,
            range_from=range_from,
            range_to=range_to,
            long_mode=options.long_mode,
            prp_rounds=options.prp_rounds,
            workers=workers or settings.harness.workers,
            chunk_size=settings.harness.chunk_size,
            output_path=out or Path(settings.report.output_dir)
            / f"{conjecture_id}_{range_from}_{range_to}.{fmt}",
            checkpoint_path=checkpoint,
            format=fmt,
        )
        engine = RunEngine(conjecture_id, options, workers=config.workers,
                           chunk_size=config.chunk_size)
        summary = engine.run(config.range_from, config.range_to, config.output_path,
                             config.checkpoint_path, config.format)

    table = Table(title=f"Conjecture {conjecture_id} on [{range_from}, {range_to}]")
    table.add_column("Status", style="cyan")
    table.add_column("Records", justify="right")
    for status_name, count in sorted(summary.counts.items()):
        table.add_row(status_name, str(count))
    console.print(table)
    if summary.resumed_from is not None:
        console.print(f"[yellow]Resumed at {summary.resumed_from}[/]")
    if summary.aborted:
        console.print(f"[bold red]Counterexample: run aborted at {summary.last_parameter}[/]")
    console.print(f"Report: {config.output_path}")

    if config.format == "jsonl" and summary.total:
        from anbn.report.writer import read_report

        _, records = read_report(config.output_path)
        typer.echo(json.dumps(records[-1].to_dict()))

    if summary.exit_code:
        raise typer.Exit(code=summary.exit_code)


@app.command("verify-report")
def verify_report_cmd(
    path: Annotated[Path, _REPORT_PATH],
) -> None:
    """Replay every record of a report through independent checks."""
    from anbn.report.verify import verify_report

    with _fail_on_error():
        result = verify_report(path)

    console.print(f"Replayed [bold]{result.passed}/{result.total}[/] records")
    if not result.digest_ok:
        console.print("[bold red]Header digest does not match its options[/]")
    for record, reason in result.failures[:20]:
        console.print(f"  [red]{record.conjecture_id} @ {record.parameter}:[/] {reason}")
    if not result.ok:
        raise typer.Exit(code=1)


@app.command()
def remarks(
    path: Annotated[Path, _CHECKS_PATH] = Path("checks/remarks.yaml"),
    long_mode: bool = typer.Option(False, "--long", help="Include hours-long checks"),
) -> None:
    """Reproduce the stated concrete values."""
    from anbn.conjectures.schemas import CheckerOptions
    from anbn.report.remarks import RemarkRunner

    with _fail_on_error():
        runner = RemarkRunner(CheckerOptions.from_settings(_settings()))
        checks = runner.load_checks(path)
        results = runner.run(checks, include_long=long_mode)

    table = Table(title="Stated values")
    table.add_column("ID", style="cyan")
    table.add_column("Expected")
    table.add_column("Actual")
    table.add_column("Result")
    for r in results:
        if r.skipped:
            verdict = "[dim]skipped (long)[/]"
        elif r.passed:
            verdict = "[green]ok[/]"
        else:
            verdict = f"[red]FAIL[/] {r.error}"
        table.add_row(r.check_id, str(r.expected)[:40], str(r.actual)[:40], verdict)
    console.print(table)

    summary = RemarkRunner.summary(results)
    console.print(f"{summary['passed']} passed, {summary['failed']} failed, "
                  f"{summary['skipped']} skipped")
    if summary["failed"]:
        raise typer.Exit(code=1)


@app.command()
def status() -> None:
    """Show registered conjectures, sequences and active settings."""
    from anbn.conjectures.factory import available_conjectures, get_checker
    from anbn.sequences.factory import available_sequences

    settings = _settings()
    console.print(f"\n[bold green]anbn-residues[/] v{__version__}\n")

    table = Table(title="Conjecture checkers")
    table.add_column("Id", style="cyan")
    table.add_column("Checker")
    table.add_column("Parameter")
    table.add_column("Default range")
    for cid in available_conjectures():
        checker = get_checker(cid)
        lo, hi = checker.default_range()
        table.add_row(cid, checker.checker_name(), checker.parameter_name, f"{lo}..{hi}")
    console.print(table)

    console.print(f"Sequences: {', '.join(available_sequences())}")
    console.print_json(settings.model_dump_json())


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and map the outcome to an exit code (0 ok, 2 counterexample, 1 error)."""
    try:
        result = app(args=argv, standalone_mode=False, prog_name="anbn")
    except Exception as exc:
        # Usage errors carry ``show`` whichever click build typer ships with.
        show = getattr(exc, "show", None)
        if callable(show):
            show()
            return 1
        if type(exc).__name__ == "Abort":
            return 1
        raise
    return result if isinstance(result, int) else 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
