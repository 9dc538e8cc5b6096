"""
Reference modular arithmetic and the brute-force oracle
"""

from .reference import (
    bits_to_int,
    d1_decode,
    d1_encode,
    int_to_bits,
    neg_block_identity,
    nested_residue,
    oracle_residue,
    oracle_residues,
    pow2_mod,
)

__all__ = [
    "bits_to_int",
    "d1_decode",
    "d1_encode",
    "int_to_bits",
    "neg_block_identity",
    "nested_residue",
    "oracle_residue",
    "oracle_residues",
    "pow2_mod",
]
