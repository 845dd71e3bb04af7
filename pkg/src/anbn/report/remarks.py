"""Concrete-value catalogue: load checks from YAML, evaluate, summarize."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml

from anbn.arith.powers import is_perfect_power
from anbn.arith.primes import nth_prime
from anbn.conjectures.coverage import family_sets, prime_bound
from anbn.conjectures.diophantine import diophantine_scan_c12
from anbn.conjectures.newman import newman_analogue_least_n
from anbn.conjectures.perfect_powers import target_value
from anbn.conjectures.representation import representation_search
from anbn.conjectures.schemas import CheckerOptions
from anbn.sequences.schemas import SequenceSpec
from anbn.witness.construct import witness
from anbn.witness.coverage import coverage_index
from anbn.witness.schemas import WitnessQuery
from anbn.witness.verify import verify_certificate

logger = logging.getLogger(__name__)


@dataclass
class RemarkCheck:
    """One stated value to reproduce."""

    id: str
    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    expected: Any = None
    long: bool = False
    description: str = ""


@dataclass
class RemarkResult:
    check_id: str
    passed: bool
    expected: Any
    actual: Any = None
    skipped: bool = False
    elapsed_ms: float = 0.0
    error: str = ""


# ---------------------------------------------------------------------------
# Evaluators: kind -> fn(params, options) -> actual value
# ---------------------------------------------------------------------------


def _coverage_index(params: dict[str, Any], opts: CheckerOptions) -> int | None:
    spec = SequenceSpec.parse(params["seq"], a=params.get("a"), b=params.get("b"))
    cap = params.get("cap") or params["m"] ** 2
    return coverage_index(spec, params["m"], max(cap, params["m"])).first_cover_index


def _covered_within(params: dict[str, Any], opts: CheckerOptions) -> list[bool]:
    sets = family_sets(params["family"], params["m"], a=params.get("a", 2),
                       sign=params.get("sign", "minus"))
    bound = params.get("bound")
    return [coverage_index(spec, params["m"], bound or cap).covered for spec, cap in sets]


def _least_k(params: dict[str, Any], opts: CheckerOptions) -> int | None:
    record = representation_search(params["clause"], params["n"], opts)
    return record.witness.get("k")


def _diophantine(params: dict[str, Any], opts: CheckerOptions) -> list[list[Any]]:
    found = diophantine_scan_c12(params["x_max"], params["exp_max"], int(params["value_cap"]))
    return sorted(list(s.as_tuple()) for s in found)


def _perfect_power(params: dict[str, Any], opts: CheckerOptions) -> list[int] | None:
    found = is_perfect_power(target_value(params["target"], params["n"], opts))
    return None if found is None else [found.base, found.exponent]


def _witness_n(params: dict[str, Any], opts: CheckerOptions) -> int | None:
    cert = witness(WitnessQuery(params["a"], params["b"], params["m"], params["r"]))
    return cert.n if verify_certificate(cert) else None


_EVALUATORS: dict[str, Callable[[dict[str, Any], CheckerOptions], Any]] = {
    "coverage_index": _coverage_index,
    "covered_within": _covered_within,
    "nth_prime": lambda params, opts: nth_prime(params["n"]),
    "prime_bound": lambda params, opts: prime_bound(params["m"]),
    "newman_least_n": lambda params, opts: newman_analogue_least_n(
        params["m"], params["r"], params["cap"]
    ),
    "least_k": _least_k,
    "diophantine": _diophantine,
    "perfect_power": _perfect_power,
    "witness_n": _witness_n,
}


def available_kinds() -> list[str]:
    return sorted(_EVALUATORS)


def _normalize(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_normalize(v) for v in value]
    if isinstance(value, list):
        return [_normalize(v) for v in value]
    return value


class RemarkRunner:
    """Run the catalogue of stated values and aggregate results."""

    def __init__(self, options: CheckerOptions | None = None):
        self.options = options or CheckerOptions()

    def load_checks(self, path: str | Path) -> list[RemarkCheck]:
        """Load checks from a YAML file or directory.

        Supports both single YAML files and directories of YAML files.
        """
        p = Path(path)
        checks: list[RemarkCheck] = []

        if p.is_file():
            checks.extend(self._parse_yaml(p))
        elif p.is_dir():
            for yaml_file in sorted(p.glob("*.yaml")) + sorted(p.glob("*.yml")):
                checks.extend(self._parse_yaml(yaml_file))
        else:
            raise FileNotFoundError(f"Check path not found: {path}")

        logger.info("Loaded %d checks from %s", len(checks), path)
        return checks

    @staticmethod
    def _parse_yaml(path: Path) -> list[RemarkCheck]:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)

        if data is None:
            return []

        raw_checks = data if isinstance(data, list) else data.get("checks", [data])

        checks = []
        for i, item in enumerate(raw_checks):
            kind = item["kind"]
            if kind not in _EVALUATORS:
                raise ValueError(f"{path}: unknown check kind '{kind}'. "
                                 f"Available: {available_kinds()}")
            checks.append(RemarkCheck(
                id=item.get("id", f"{path.stem}_{i}"),
                kind=kind,
                params=item.get("params", {}),
                expected=item.get("expected"),
                long=bool(item.get("long", False)),
                description=item.get("description", ""),
            ))

        return checks

    def run_one(self, check: RemarkCheck, include_long: bool = False) -> RemarkResult:
        if check.long and not include_long:
            return RemarkResult(check.id, passed=True, expected=check.expected, skipped=True)

        opts = replace(self.options, long_mode=True) if check.long else self.options
        start = time.perf_counter()
        try:
            actual = _normalize(_EVALUATORS[check.kind](check.params, opts))
        except Exception as exc:  # noqa: BLE001
            logger.warning("Check %s raised %s", check.id, exc)
            return RemarkResult(check.id, passed=False, expected=check.expected,
                                error=f"{type(exc).__name__}: {exc}")
        elapsed_ms = (time.perf_counter() - start) * 1000
        passed = actual == _normalize(check.expected)
        if not passed:
            logger.warning("Check %s: expected %r, got %r", check.id, check.expected, actual)
        return RemarkResult(check.id, passed, check.expected, actual, elapsed_ms=elapsed_ms)

    def run(self, checks: list[RemarkCheck], include_long: bool = False) -> list[RemarkResult]:
        return [self.run_one(check, include_long) for check in checks]

    @staticmethod
    def summary(results: list[RemarkResult]) -> dict[str, int]:
        """Counts of passed, failed and skipped checks."""
        return {
            "total": len(results),
            "passed": sum(1 for r in results if r.passed and not r.skipped),
            "failed": sum(1 for r in results if not r.passed),
            "skipped": sum(1 for r in results if r.skipped),
        }
