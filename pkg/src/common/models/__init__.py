"""
Domain models for the residue generator toolkit
"""

from .circuit import GATE_ARITY, GLUE_KINDS, CostReport, D1Output, Gate, GateKind, OutputPort, PlainResidue, Signal
from .generator import BuildReport, GeneratorFamily, GeneratorSpec, SplitVectors
from .modulus import D1Value, Modulus, ModulusKind, WeightDescriptor
from .netlist import Netlist
from .pool import BitBlock, BitPool
from .reduction import CorrectionLedger, EacPolicy, LedgerEntry, ShorthandStage, ShorthandTable, StageAllocation
from .verification import DEFAULT_EXHAUSTIVE_BUDGET, RANDOM_GENERATOR, SweepMode, SweepPlan, Verdict

__all__ = [
    "BitBlock",
    "BitPool",
    "BuildReport",
    "CorrectionLedger",
    "CostReport",
    "D1Output",
    "D1Value",
    "DEFAULT_EXHAUSTIVE_BUDGET",
    "EacPolicy",
    "GATE_ARITY",
    "GLUE_KINDS",
    "Gate",
    "GateKind",
    "GeneratorFamily",
    "GeneratorSpec",
    "LedgerEntry",
    "Modulus",
    "ModulusKind",
    "Netlist",
    "OutputPort",
    "PlainResidue",
    "RANDOM_GENERATOR",
    "ShorthandStage",
    "ShorthandTable",
    "SplitVectors",
    "Signal",
    "StageAllocation",
    "SweepMode",
    "SweepPlan",
    "Verdict",
    "WeightDescriptor",
]
