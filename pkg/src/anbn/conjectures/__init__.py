"""Conjecture checkers: coverage, representation, perfect-power and residue searches."""

from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.coverage import CoverageFamily, coverage_conjecture
from anbn.conjectures.diophantine import KNOWN_SOLUTIONS, diophantine_scan_c12
from anbn.conjectures.factory import available_conjectures, get_checker
from anbn.conjectures.newman import newman_analogue_least_n
from anbn.conjectures.perfect_powers import PowerTarget, perfect_power_scan
from anbn.conjectures.replay import replay_record, spot_check_minimality
from anbn.conjectures.representation import CLAUSES, representation_search
from anbn.conjectures.schemas import (
    CheckerOptions,
    ConjectureRecord,
    DiophantineSolution,
    RecordStatus,
    RepresentationSpec,
)

__all__ = [
    "CLAUSES",
    "KNOWN_SOLUTIONS",
    "CheckerOptions",
    "ConjectureChecker",
    "ConjectureRecord",
    "CoverageFamily",
    "DiophantineSolution",
    "PowerTarget",
    "RecordStatus",
    "RepresentationSpec",
    "available_conjectures",
    "coverage_conjecture",
    "diophantine_scan_c12",
    "get_checker",
    "newman_analogue_least_n",
    "perfect_power_scan",
    "replay_record",
    "representation_search",
    "spot_check_minimality",
]
