"""
Command-line surface
"""

from .commands import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    cmd_compare,
    cmd_export,
    cmd_gen,
    cmd_report,
    cmd_table,
    cmd_verify,
)
from .main import build_parser, main

__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "cmd_compare",
    "cmd_export",
    "cmd_gen",
    "cmd_report",
    "cmd_table",
    "cmd_verify",
    "main",
]
