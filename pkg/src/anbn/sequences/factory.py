"""Sequence factory: registry, lazy import, singleton cache."""

from __future__ import annotations

import importlib
import logging

from anbn.sequences.base import IntegerSequence
from anbn.sequences.schemas import SequenceKind, SequenceSpec

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Sequence registry: (kind, module_path, class_name)
# ---------------------------------------------------------------------------

_SEQUENCE_REGISTRY: list[tuple[SequenceKind, str, str]] = [
    (SequenceKind.EXP_LINEAR, "anbn.sequences.terms", "ExpLinearSequence"),
    (SequenceKind.PRIME_MINUS_N, "anbn.sequences.terms", "PrimeMinusNSequence"),
    (SequenceKind.N_TIMES_PRIME, "anbn.sequences.terms", "NTimesPrimeSequence"),
    (SequenceKind.CENTRAL_BINOM_PLUS_N, "anbn.sequences.terms", "CentralBinomPlusNSequence"),
    (SequenceKind.CENTRAL_BINOM_MINUS_N, "anbn.sequences.terms", "CentralBinomMinusNSequence"),
    (SequenceKind.CATALAN_PLUS_N, "anbn.sequences.terms", "CatalanPlusNSequence"),
    (SequenceKind.CATALAN_MINUS_N, "anbn.sequences.terms", "CatalanMinusNSequence"),
]

# Singleton cache
_sequence_cache: dict[SequenceSpec, IntegerSequence] = {}


def get_sequence(spec: SequenceSpec, **kwargs) -> IntegerSequence:
    """Get the sequence implementation for ``spec``.

    Args:
        spec: Which sequence (and its parameters for ``explinear``).
        **kwargs: Capacities passed to the sequence constructor.

    Returns:
        An ``IntegerSequence`` instance.
    """
    if not kwargs and spec in _sequence_cache:
        return _sequence_cache[spec]

    for kind, module_path, cls_name in _SEQUENCE_REGISTRY:
        if kind == spec.kind:
            mod = importlib.import_module(module_path)
            cls = getattr(mod, cls_name)
            instance = cls(**spec.params(), **kwargs)
            if not kwargs:
                _sequence_cache[spec] = instance
            return instance

    available = [k.value for k, _, _ in _SEQUENCE_REGISTRY]
    raise ValueError(f"Unknown sequence '{spec.kind}'. Available: {available}")


def available_sequences() -> list[str]:
    """Return names of registered sequences."""
    return [k.value for k, _, _ in _SEQUENCE_REGISTRY]


def clear_cache() -> None:
    """Clear singleton cache (for testing)."""
    _sequence_cache.clear()


def seq_term(spec: SequenceSpec, n: int, **kwargs) -> int:
    """Exact ``n``-th term of ``spec``."""
    return get_sequence(spec, **kwargs).term(n)


def seq_term_mod(spec: SequenceSpec, n: int, m: int, **kwargs) -> int:
    """``n``-th term of ``spec`` reduced into ``[0, m)``."""
    return get_sequence(spec, **kwargs).term_mod(n, m)
