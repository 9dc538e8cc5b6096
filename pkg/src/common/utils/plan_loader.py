"""
YAML plan loading utilities
"""

import logging
import os

import yaml

from .plan_validator import PlanModel, YamlModel

logger = logging.getLogger(__name__)


def load_plan_from_file(file_path: str) -> PlanModel:
    """
    Load and validate a verification plan.

    Args:
        file_path: Path to the YAML file

    Returns:
        The validated plan

    Raises:
        FileNotFoundError: the file does not exist
        pydantic.ValidationError: the plan is malformed
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Plan file not found: {file_path}")
    with open(file_path, "r") as f:
        data = yaml.safe_load(f) or {}
    plan = YamlModel(**data).plan
    logger.info(f"Loaded plan '{plan.name}': {len(plan.sweeps)} sweep entries")
    return plan
