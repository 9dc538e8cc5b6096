"""
Equivalence sweeps, block contracts and golden comparisons
"""

from .goldens import check_goldens
from .plan import run_plan
from .properties import (
    SharingReport,
    check_nesting,
    check_property1,
    check_property2,
    check_sharing,
    check_zero_correction,
    sharing_report,
)
from .sweep import exhaustive_bits, mismatches, random_bits, run_sweep

__all__ = [
    "SharingReport",
    "check_goldens",
    "check_nesting",
    "check_property1",
    "check_property2",
    "check_sharing",
    "check_zero_correction",
    "exhaustive_bits",
    "mismatches",
    "random_bits",
    "run_plan",
    "run_sweep",
    "sharing_report",
]
