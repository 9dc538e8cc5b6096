"""
Validator for verification plan YAML files
"""

import logging
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.common.models import GeneratorFamily, SweepMode

logger = logging.getLogger(__name__)


class SweepEntryModel(BaseModel):
    """One sweep line of a plan; either p or the inclusive range p_from..p_to."""
    family: GeneratorFamily
    n: int = Field(ge=2)
    p: Optional[int] = Field(default=None, ge=1)
    p_from: Optional[int] = Field(default=None, ge=1)
    p_to: Optional[int] = Field(default=None, ge=1)
    mode: SweepMode = SweepMode.EXHAUSTIVE
    samples: int = Field(default=1_000_000, ge=1)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def validate_width(self):
        """Exactly one of p or p_from/p_to must be given."""
        if self.p is None and (self.p_from is None or self.p_to is None):
            raise ValueError("a sweep needs 'p' or both 'p_from' and 'p_to'")
        if self.p is not None and (self.p_from is not None or self.p_to is not None):
            raise ValueError("'p' cannot be combined with 'p_from'/'p_to'")
        if self.p is None and self.p_from > self.p_to:
            raise ValueError(f"empty range p_from={self.p_from} > p_to={self.p_to}")
        return self

    def widths(self) -> List[int]:
        if self.p is not None:
            return [self.p]
        return list(range(self.p_from, self.p_to + 1))


class ZeroCorrectionModel(BaseModel):
    n: List[int]
    p_from_multiple: int = Field(default=4, ge=1)
    p_to_multiple: int = Field(default=16, ge=1)


class NestingModel(BaseModel):
    n: List[int]
    p: int = Field(ge=1)


class PlanModel(BaseModel):
    name: str
    description: Optional[str] = None
    sweeps: List[SweepEntryModel] = Field(default_factory=list)
    property1: List[int] = Field(default_factory=list)
    property2: List[int] = Field(default_factory=list)
    nesting: Optional[NestingModel] = None
    zero_correction: Optional[ZeroCorrectionModel] = None
    sharing: List[List[int]] = Field(default_factory=list)
    goldens: bool = False

    @model_validator(mode="after")
    def validate_sharing(self):
        for pair in self.sharing:
            if len(pair) != 2:
                raise ValueError(f"sharing entries are [p, n] pairs, got {pair}")
        return self


class YamlModel(BaseModel):
    plan: PlanModel


def validate_plan_file(file_path: str) -> bool:
    """
    Validates a YAML file against the plan structure.

    Args:
        file_path: Path to the YAML file

    Returns:
        bool: True if validation succeeds, False otherwise
    """
    try:
        with open(file_path, "r") as file:
            yaml_content = yaml.safe_load(file)
        YamlModel(**yaml_content)
        return True
    except FileNotFoundError:
        logger.error(f"File not found: {file_path}")
        return False
    except yaml.YAMLError as e:
        logger.error(f"YAML parsing error in {file_path}: {str(e)}")
        return False
    except (ValidationError, TypeError) as e:
        logger.error(f"Validation error in {file_path}: {str(e)}")
        return False
