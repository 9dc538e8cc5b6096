"""
Utility functions
"""

from .log_config import configure_logging, sweep_progress
from .plan_loader import load_plan_from_file
from .plan_validator import PlanModel, validate_plan_file
from .settings import Settings

__all__ = [
    "PlanModel",
    "Settings",
    "configure_logging",
    "load_plan_from_file",
    "sweep_progress",
    "validate_plan_file",
]
