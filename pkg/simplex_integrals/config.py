"""Configuration for simplex-integrals using pydantic-settings.

All settings are driven by environment variables with the SIMPINT_ prefix.
See .env.example for the full list of configurable options.
"""

from __future__ import annotations

import logging
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Engine and CLI defaults loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SIMPINT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    mc_samples: int = Field(default=100_000, ge=1)
    mc_streams: int = Field(default=1, ge=1)
    seed: int = Field(default=20240917, ge=0)
    sigma_band: float = Field(default=4.0, gt=0)

    xi_rel_tolerance: float = Field(default=1e-10, gt=0)
    max_dimension: int = Field(default=64, ge=1)

    bench_degrees: List[int] = Field(default_factory=lambda: list(range(1, 11)))
    bench_dimensions: List[int] = Field(default_factory=lambda: [2, 3, 4, 6])
    bench_repeats: int = Field(default=5, ge=1)
    bench_terms: int = Field(default=20, ge=1)

    workers: int = Field(default=1, ge=1)


def get_settings() -> Settings:
    """Load settings from the environment."""
    s = Settings()
    logger.debug("Loaded settings: %s", s.model_dump())
    return s
