#!/usr/bin/env python
"""
Simple script to validate a verification plan YAML file
"""
import logging
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.common.utils.log_config import configure_logging
from src.common.utils.plan_validator import validate_plan_file

configure_logging(level=logging.INFO)
logger = logging.getLogger(__name__)


def main():
    if len(sys.argv) != 2:
        print("Usage: python validate_plan.py <path_to_yaml_file>")
        return 2

    plan_file = sys.argv[1]
    if not os.path.exists(plan_file):
        logger.error(f"File not found: {plan_file}")
        return 2

    logger.info(f"Validating plan file: {plan_file}")
    if validate_plan_file(plan_file):
        logger.info(f"Plan validation successful: {plan_file}")
        return 0
    logger.error(f"Plan validation failed: {plan_file}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
