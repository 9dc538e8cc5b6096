"""
Carry-save reduction engine: weight-class pools, CSA scheduling and shorthand tables
"""

from .pool import build_pool, partition_blocks
from .reducer import dadda_heights, emit_reduction, reduce, schedule_stage
from .shorthand import render_corrections, render_shorthand

__all__ = [
    "build_pool",
    "dadda_heights",
    "emit_reduction",
    "partition_blocks",
    "reduce",
    "render_corrections",
    "render_shorthand",
    "schedule_stage",
]
