"""Bounded scan for x^n ± n = y^m with every variable above 1."""

from __future__ import annotations

import logging
import random
from typing import Any

from anbn.arith.powers import integer_root, is_perfect_power
from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.schemas import ConjectureRecord, DiophantineSolution, RecordStatus
from anbn.errors import PreconditionError
from anbn.witness.schemas import Verdict

logger = logging.getLogger(__name__)

KNOWN_SOLUTIONS: frozenset[tuple[int, int, int, int, str]] = frozenset({
    (5, 2, 3, 3, "+"),
    (5, 3, 2, 7, "+"),
    (2, 5, 3, 3, "-"),
    (2, 7, 11, 2, "-"),
})


def scan_base(x: int, exp_max: int, value_cap: int) -> tuple[list[DiophantineSolution], int]:
    """All solutions with base ``x``; also returns how many exponents were in range."""
    solutions: list[DiophantineSolution] = []
    scanned = 0
    power = x
    for n in range(2, exp_max + 1):
        power *= x
        if power > value_cap:
            break
        scanned += 1
        for sign, value in (("+", power + n), ("-", power - n)):
            hit = is_perfect_power(value)
            if hit is not None:
                solutions.append(DiophantineSolution(x, n, hit.base, hit.exponent, sign))
    return solutions, scanned


def diophantine_scan_c12(
    x_max: int, exp_max: int, value_cap: int
) -> list[DiophantineSolution]:
    """Every ``(x, n)`` with ``2 <= x <= x_max``, ``2 <= n <= exp_max``, ``x**n <= value_cap``."""
    if x_max < 2 or exp_max < 2 or value_cap < 4:
        raise PreconditionError(
            f"bounds must admit x, n >= 2: x_max={x_max}, exp_max={exp_max}, cap={value_cap}"
        )
    solutions: list[DiophantineSolution] = []
    for x in range(2, x_max + 1):
        found, scanned = scan_base(x, exp_max, value_cap)
        if not scanned:
            break
        solutions.extend(found)
    logger.info("x^n±n=y^m scan up to x=%d, n=%d: %d solutions", x_max, exp_max, len(solutions))
    return solutions


def _is_power_by_roots(value: int) -> bool:
    if value < 4:
        return False
    return any(integer_root(value, e)[1] for e in range(2, value.bit_length() + 1))


class PowerShiftChecker(ConjectureChecker):
    """Id ``1.2``, one base ``x`` per record."""

    conjecture_id = "1.2"
    threshold = 2
    parameter_name = "x"
    default_span = 99

    def evaluate(
        self, parameter: int, rng: random.Random
    ) -> tuple[dict[str, Any], RecordStatus, int]:
        opts = self.options
        solutions, scanned = scan_base(parameter, opts.c12_exp_max, opts.c12_value_cap)
        unknown = [s for s in solutions if s.as_tuple() not in KNOWN_SOLUTIONS]
        status = RecordStatus.COUNTEREXAMPLE if unknown else RecordStatus.VERIFIED
        witness = {
            "solutions": [s.to_dict() for s in solutions],
            "exponents_scanned": scanned,
        }
        return witness, status, 0

    def replay(self, record: ConjectureRecord) -> Verdict:
        x = record.parameter
        opts = self.options
        listed = {DiophantineSolution.from_dict(s).as_tuple() for s in record.witness["solutions"]}
        for sx, n, y, m, sign in listed:
            offset = n if sign == "+" else -n
            if sx != x or x**n + offset != y**m or m < 2 or y < 2:
                return Verdict(False, f"({sx}, {n}, {y}, {m}, {sign}) does not solve the equation")
        if not listed <= KNOWN_SOLUTIONS:
            return Verdict(False, f"unlisted solutions {sorted(listed - KNOWN_SOLUTIONS)}")

        # Recount hits with a root test per exponent.
        hits = 0
        for n in range(2, opts.c12_exp_max + 1):
            if x**n > opts.c12_value_cap:
                break
            hits += _is_power_by_roots(x**n + n) + _is_power_by_roots(x**n - n)
        if hits != len(listed):
            return Verdict(False, f"root recount finds {hits}, record lists {len(listed)}")
        return Verdict(True)
