"""Checkpoint files and the config digest that guards resumption."""

from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path

from anbn.conjectures.schemas import CheckerOptions
from anbn.errors import CheckpointMismatchError
from anbn.report.schemas import Checkpoint

logger = logging.getLogger(__name__)


def config_digest(conjecture_id: str, options: CheckerOptions) -> str:
    """sha256 over every option that changes records (not workers or chunking)."""
    payload = {"conjecture_id": conjecture_id, **options.result_fields()}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def load_checkpoint(path: str | Path) -> Checkpoint | None:
    p = Path(path)
    if not p.exists():
        return None
    with open(p, encoding="utf-8") as fh:
        return Checkpoint.from_dict(json.load(fh))


def save_checkpoint(path: str | Path, checkpoint: Checkpoint) -> None:
    """Write via a temporary file so a kill never leaves half a checkpoint."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    tmp = p.with_suffix(p.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(checkpoint.to_dict(), fh)
    tmp.replace(p)


def ensure_resumable(checkpoint: Checkpoint, conjecture_id: str, digest: str) -> None:
    """Refuse to resume a checkpoint written for another conjecture or configuration."""
    if checkpoint.conjecture_id != conjecture_id:
        raise CheckpointMismatchError(
            f"checkpoint is for conjecture {checkpoint.conjecture_id}, not {conjecture_id}"
        )
    if checkpoint.config_digest != digest:
        raise CheckpointMismatchError(
            f"checkpoint config digest {checkpoint.config_digest[:12]} does not match "
            f"current {digest[:12]}; refusing to resume"
        )
