"""
Family name to builder dispatch
"""

from typing import Callable, Dict

from src.common.models import GeneratorFamily, GeneratorSpec, Netlist

from .classic import build_classic_fermat, build_classic_mersenne
from .universal import build_bi_residue, build_universal_d1

BUILDERS: Dict[GeneratorFamily, Callable[[int, int], Netlist]] = {
    GeneratorFamily.CLASSIC_MERSENNE: build_classic_mersenne,
    GeneratorFamily.CLASSIC_FERMAT: build_classic_fermat,
    GeneratorFamily.UNIVERSAL_D1: build_universal_d1,
    GeneratorFamily.BI_RESIDUE: build_bi_residue,
}


def build_generator(spec: GeneratorSpec) -> Netlist:
    return BUILDERS[spec.family](spec.p, spec.n)
