"""
Input partitioning and weight-class pools
"""

import logging
from typing import List, Tuple

from src.common.models import BitBlock, BitPool, CorrectionLedger, Modulus, Signal
from src.modmath import pow2_mod
from src.netlist import passthrough

logger = logging.getLogger(__name__)


def partition_blocks(p: int, w: int) -> List[BitBlock]:
    """
    Split p input positions into ceil(p/w) blocks of w bits, LSB block first.

    Args:
        p: Input width
        w: Block width

    Returns:
        Blocks whose positions are input indices; the top block is padded with None
    """
    if p < 1 or w < 1:
        raise ValueError(f"partition needs p >= 1 and w >= 1, got p={p}, w={w}")
    count = -(-p // w)
    blocks = []
    for j in range(count):
        positions = [j * w + i if j * w + i < p else None for i in range(w)]
        blocks.append(BitBlock(index=j, positions=positions))
    return blocks


def build_pool(p: int, m: Modulus) -> Tuple[BitPool, CorrectionLedger]:
    """
    Group the p input bits by residue weight.

    Modulo 2^n+1, bits of odd n-bit blocks carry a negative weight; they enter
    the pool inverted and each block charges the ledger the sum of -2^k over
    its live bits. Padding positions are dropped without a charge.

    Args:
        p: Input width
        m: Modulus

    Returns:
        (pool, ledger); the pool's source netlist exposes the pool signals with
        the ledger total as its correction
    """
    width = m.width
    ledger = CorrectionLedger(modulus=m)
    classes: List[List[Signal]] = [[] for _ in range(width)]
    for block in partition_blocks(p, width):
        charge = 0
        for i in block.live:
            weight = pow2_mod(i, m)
            classes[weight.exponent].append(Signal(wire=i, inverted=weight.negative, weight_class=weight.exponent))
            if weight.negative:
                charge -= weight.magnitude
        if charge:
            ledger.charge(charge, f"B{block.index}")
    if m.inverts_wrap:
        logger.debug(f"Pool p={p} mod {m.value()}: block charges {[e.amount for e in ledger.entries]}")

    flat = [signal for bits in classes for signal in bits]
    source = passthrough(p, m, signals=flat, correction=ledger.accumulated, name="pool")
    return BitPool(modulus=m, classes=classes, source=source), ledger
