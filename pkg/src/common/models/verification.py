"""
Verification plan and verdict models
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .generator import GeneratorFamily

DEFAULT_EXHAUSTIVE_BUDGET = 1 << 22
RANDOM_GENERATOR = "numpy.random.PCG64 via SeedSequence.spawn"


class SweepMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class SweepPlan(BaseModel):
    """
    What to sweep and how.

    Attributes:
        mode: Exhaustive enumeration or seeded uniform sampling
        p, n: Generator parameters
        family: Generator family; may be omitted when a netlist is supplied directly
        samples: Number of random vectors (random mode)
        seed: Seed of the random stream (random mode)
        budget: Largest number of vectors an exhaustive sweep may evaluate
    """
    model_config = ConfigDict(frozen=True)

    mode: SweepMode = SweepMode.EXHAUSTIVE
    p: int = Field(ge=1)
    n: int = Field(ge=2)
    family: Optional[GeneratorFamily] = None
    samples: int = Field(default=1_000_000, ge=1)
    seed: int = 42
    budget: int = Field(default=DEFAULT_EXHAUSTIVE_BUDGET, ge=1)

    @property
    def vector_count(self) -> int:
        return (1 << self.p) if self.mode == SweepMode.EXHAUSTIVE else self.samples


class Verdict(BaseModel):
    """
    Outcome of a check.

    Attributes:
        name: What was checked
        passed: True when no mismatch was found
        counterexample: Smallest failing input value, if any
        failing_port: Output port that mismatched
        evaluated: Number of vectors (or items) compared
        generator: Identity of the random generator, for random sweeps
        seed: Seed used, for random sweeps
        details: Human-readable mismatch notes
    """
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    counterexample: Optional[int] = None
    failing_port: Optional[str] = None
    evaluated: int = 0
    generator: Optional[str] = None
    seed: Optional[int] = None
    details: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_counterexample(self):
        if not self.passed and self.counterexample is None and not self.details:
            raise ValueError("a failing verdict needs a counterexample or details")
        return self
