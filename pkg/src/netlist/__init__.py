"""
Gate-level circuit representation: construction, evaluation, cost and composition
"""

from .builder import NetlistBuilder, passthrough
from .compose import compose, wire_by_position
from .cost import cost
from .simulate import Evaluation, PortArrays, PortReading, evaluate, read_port, simulate, simulate_ports

__all__ = [
    "Evaluation",
    "NetlistBuilder",
    "PortArrays",
    "PortReading",
    "compose",
    "cost",
    "evaluate",
    "passthrough",
    "read_port",
    "simulate",
    "simulate_ports",
    "wire_by_position",
]
