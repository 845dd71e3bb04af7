"""Shared fixtures for tests: brute-force oracles, small options, temp paths."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from anbn.conjectures import factory as conjecture_factory
from anbn.conjectures.schemas import CheckerOptions
from anbn.sequences import factory as sequence_factory

# ---------------------------------------------------------------------------
# Enumeration oracles
# ---------------------------------------------------------------------------


def _partitions(n: int, largest: int) -> int:
    """Partitions of ``n`` with every part <= ``largest``, by explicit recursion."""
    if n == 0:
        return 1
    return sum(_partitions(n - part, part) for part in range(1, min(n, largest) + 1))


def _strict_partitions(n: int, below: int) -> int:
    """Partitions of ``n`` into distinct parts all < ``below``."""
    if n == 0:
        return 1
    return sum(_strict_partitions(n - part, part) for part in range(1, min(n, below - 1) + 1))


def _set_partitions(n: int) -> int:
    """Count restricted growth strings of length ``n``."""
    def grow(prefix_len: int, blocks: int) -> int:
        if prefix_len == n:
            return 1
        return sum(grow(prefix_len + 1, max(blocks, label + 1)) for label in range(blocks + 1))

    return 1 if n == 0 else grow(1, 1)


def _trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.fixture
def count_partitions() -> Callable[[int], int]:
    return lambda n: _partitions(n, n)


@pytest.fixture
def count_strict_partitions() -> Callable[[int], int]:
    return lambda n: _strict_partitions(n, n + 1)


@pytest.fixture
def count_set_partitions() -> Callable[[int], int]:
    return _set_partitions


@pytest.fixture
def trial_is_prime() -> Callable[[int], bool]:
    return _trial_is_prime


# ---------------------------------------------------------------------------
# Options and paths
# ---------------------------------------------------------------------------


@pytest.fixture
def options() -> CheckerOptions:
    """Desk-scale options with a fixed seed."""
    return CheckerOptions(seed=7, prp_rounds=8)


@pytest.fixture
def report_path(tmp_path: Path) -> Path:
    return tmp_path / "reports" / "run.jsonl"


@pytest.fixture
def checkpoint_path(tmp_path: Path) -> Path:
    return tmp_path / "reports" / "run.ckpt.json"


@pytest.fixture(autouse=True)
def _clear_factories():
    yield
    conjecture_factory.clear_cache()
    sequence_factory.clear_cache()
