"""Conjecture checker factory: registry, lazy import, singleton cache."""

from __future__ import annotations

import importlib
import logging

from anbn.conjectures.base import ConjectureChecker
from anbn.conjectures.schemas import CheckerOptions
from anbn.errors import UnknownConjectureError

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Checker registry: (conjecture_id, module_path, class_name)
# ---------------------------------------------------------------------------

_CHECKER_REGISTRY: list[tuple[str, str, str]] = [
    ("1.1", "anbn.conjectures.coverage", "ExpMinusNCoverageChecker"),
    ("1.2", "anbn.conjectures.diophantine", "PowerShiftChecker"),
    ("1.3i", "anbn.conjectures.representation", "ShiftedPowerPrimeChecker"),
    ("1.3ii", "anbn.conjectures.representation", "PowerPairSumChecker"),
    ("1.4i", "anbn.conjectures.coverage", "PrimeCoverageChecker"),
    ("1.4ii", "anbn.conjectures.perfect_powers", "PrimeProductPowerChecker"),
    ("1.5i", "anbn.conjectures.coverage", "BinomialCoverageChecker"),
    ("1.5ii", "anbn.conjectures.perfect_powers", "BinomialPowerChecker"),
    ("1.6i", "anbn.conjectures.perfect_powers", "PartitionPowerChecker"),
    ("1.6i-bell", "anbn.conjectures.perfect_powers", "BellPowerChecker"),
    ("1.6ii", "anbn.conjectures.representation", "PartitionPairSumChecker"),
    ("1.6iii", "anbn.conjectures.representation", "PowerPartitionSumChecker"),
    ("1.7i", "anbn.conjectures.newman", "StrictPartitionResidueChecker"),
    ("1.7ii", "anbn.conjectures.representation", "StrictProductPrimeChecker"),
    ("1.7iii", "anbn.conjectures.representation", "MixedPartitionPrimeChecker"),
    ("1.8i", "anbn.conjectures.representation", "TotientPowerPrimeChecker"),
    ("1.8ii", "anbn.conjectures.representation", "TotientTriplePowerPrimeChecker"),
    ("T1.1", "anbn.conjectures.coverage", "ResidueSystemChecker"),
]

# Singleton cache
_checker_cache: dict[str, ConjectureChecker] = {}


def get_checker(conjecture_id: str, options: CheckerOptions | None = None) -> ConjectureChecker:
    """Get the checker for a conjecture id.

    Args:
        conjecture_id: One of ``available_conjectures()``, e.g. ``"1.3i"``.
        options: Run options; default options share a cached instance.

    Returns:
        A ``ConjectureChecker`` instance.

    Raises:
        UnknownConjectureError: The id is not registered.
    """
    if options is None and conjecture_id in _checker_cache:
        return _checker_cache[conjecture_id]

    for reg_id, module_path, cls_name in _CHECKER_REGISTRY:
        if reg_id == conjecture_id:
            mod = importlib.import_module(module_path)
            cls = getattr(mod, cls_name)
            instance = cls(options)
            if options is None:
                _checker_cache[conjecture_id] = instance
            return instance

    raise UnknownConjectureError(
        f"Unknown conjecture '{conjecture_id}'. Available: {available_conjectures()}"
    )


def available_conjectures() -> list[str]:
    """Return registered conjecture ids."""
    return [k for k, _, _ in _CHECKER_REGISTRY]


def clear_cache() -> None:
    """Clear singleton cache (for testing)."""
    _checker_cache.clear()
