"""
Residue generator builders and their arithmetic blocks
"""

from .adders import all_ones, constant_bits, increment, mux, ripple_add
from .classic import (
    build_classic_fermat,
    build_classic_mersenne,
    fermat_adder,
    fermat_final_netlist,
    mersenne_adder,
    mersenne_final_netlist,
)
from .fermat_blocks import csa_stage_ferm, d1_add_plus_two, final_adder_ferm_d1, property1_netlist, property2_netlist
from .registry import BUILDERS, build_generator
from .universal import CORE_CONSTANT, bi_core_netlist, build_bi_residue, build_universal_d1, d1_core_netlist

__all__ = [
    "BUILDERS",
    "CORE_CONSTANT",
    "all_ones",
    "bi_core_netlist",
    "build_bi_residue",
    "build_classic_fermat",
    "build_classic_mersenne",
    "build_generator",
    "build_universal_d1",
    "constant_bits",
    "csa_stage_ferm",
    "d1_add_plus_two",
    "d1_core_netlist",
    "fermat_adder",
    "fermat_final_netlist",
    "final_adder_ferm_d1",
    "increment",
    "mersenne_adder",
    "mersenne_final_netlist",
    "mux",
    "property1_netlist",
    "property2_netlist",
    "ripple_add",
]
