"""Application settings loaded from YAML with environment variable overrides."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

# ---------------------------------------------------------------------------
# Settings sections
# ---------------------------------------------------------------------------


class ArithSettings(BaseModel):
    factor_bound: int = Field(default=10**12, ge=1)
    sieve_capacity: int = Field(default=50_000_000, ge=2)
    prp_rounds: int = Field(default=32, ge=1)


class SequenceSettings(BaseModel):
    partition_capacity: int = Field(default=20_000, ge=1)
    binomial_capacity: int = Field(default=200_000, ge=1)
    bell_capacity: int = Field(default=3_000, ge=1)


class HarnessSettings(BaseModel):
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=64, ge=1)
    seed: int = 20131205
    long_mode: bool = False
    totient_reading: Literal["strict", "sum"] = "strict"
    desk_max_k: int = Field(default=5_000, ge=1)
    newman_cap: int = Field(default=10_000, ge=1)
    c12_exp_max: int = Field(default=20, ge=2)
    c12_value_cap: int = Field(default=10**30, ge=4)


class ReportSettings(BaseModel):
    format: Literal["jsonl", "csv"] = "jsonl"
    output_dir: str = "local_data/reports"


# ---------------------------------------------------------------------------
# Root settings
# ---------------------------------------------------------------------------


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="ANBN_", env_nested_delimiter="__")

    arith: ArithSettings = Field(default_factory=ArithSettings)
    sequences: SequenceSettings = Field(default_factory=SequenceSettings)
    harness: HarnessSettings = Field(default_factory=HarnessSettings)
    report: ReportSettings = Field(default_factory=ReportSettings)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Environment beats the YAML file, which arrives as init kwargs.
        return env_settings, init_settings


def _find_settings_file() -> Path | None:
    """Walk up from cwd looking for settings.yaml."""
    profile = os.getenv("ANBN_PROFILE", "")
    names = [f"settings-{profile}.yaml", "settings.yaml"] if profile else ["settings.yaml"]

    cwd = Path.cwd()
    for parent in [cwd, *cwd.parents]:
        for name in names:
            candidate = parent / name
            if candidate.exists():
                return candidate
    return None


def load_settings(path: str | Path | None = None) -> Settings:
    """Load settings from YAML file, falling back to defaults."""
    path = Path(path) if path is not None else _find_settings_file()
    if path is None:
        return Settings()

    with open(path, encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}

    return Settings(**raw)
