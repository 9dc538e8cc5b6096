"""
Runtime settings read from the environment (and a .env file via python-dotenv)
"""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from src.common.models import DEFAULT_EXHAUSTIVE_BUDGET

logger = logging.getLogger(__name__)

REPO_ROOT = Path(__file__).resolve().parents[3]


class Settings(BaseModel):
    """
    Attributes:
        exhaustive_budget: Largest vector count an exhaustive sweep may run
        chunk_size: Input vectors simulated per numpy pass
        workers: Threads used by sweeps
        seed: Default seed of random sweeps
        golden_dir: Directory holding the golden shorthand tables and corrections
    """
    model_config = ConfigDict(frozen=True)

    exhaustive_budget: int = Field(default=DEFAULT_EXHAUSTIVE_BUDGET, ge=1)
    chunk_size: int = Field(default=1 << 16, ge=1)
    workers: int = Field(default=1, ge=1)
    seed: int = 42
    golden_dir: Path = REPO_ROOT / "goldens"

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from RESGEN_* variables, loading .env first."""
        load_dotenv()
        values = {}
        for field, variable in (
            ("exhaustive_budget", "RESGEN_EXHAUSTIVE_BUDGET"),
            ("chunk_size", "RESGEN_CHUNK_SIZE"),
            ("workers", "RESGEN_WORKERS"),
            ("seed", "RESGEN_SEED"),
            ("golden_dir", "RESGEN_GOLDEN_DIR"),
        ):
            raw = os.environ.get(variable)
            if raw:
                values[field] = raw
        settings = cls(**values)
        logger.debug(f"Settings: {settings}")
        return settings
