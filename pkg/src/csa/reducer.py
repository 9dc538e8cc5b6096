"""
Carry-save reduction of weight-class pools with end-around carries
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.common.errors import ImpossibleTargetError
from src.common.models import (
    BitPool,
    CorrectionLedger,
    EacPolicy,
    Modulus,
    Netlist,
    PlainResidue,
    ShorthandStage,
    ShorthandTable,
    Signal,
    StageAllocation,
)
from src.netlist import NetlistBuilder

logger = logging.getLogger(__name__)

# Bounds the fixed-point iteration of one stage; it converges in O(width) passes.
_MAX_PASSES_PER_CLASS = 4


def dadda_heights(target: int, limit: int) -> List[int]:
    """Dadda height sequence target, floor(1.5*target), ... up to the first value >= limit."""
    heights = [target]
    while heights[-1] < limit:
        heights.append(heights[-1] * 3 // 2)
    return heights


def _stage_height(counts: Sequence[int], target: int) -> int:
    tallest = max(counts)
    return max(h for h in dadda_heights(target, tallest) if h < tallest)


def _allocate(counts: Sequence[int], height: int, wrap: bool) -> Optional[List[StageAllocation]]:
    """
    Least fixed point of the cyclic allocation for one stage.

    Class k must shed counts[k] + carries_in[k] - height bits, with carries_in[k]
    the carries of class k-1. FAs remove two bits each, HAs one.
    """
    width = len(counts)
    alloc = [StageAllocation() for _ in range(width)]
    for _ in range(_MAX_PASSES_PER_CLASS * width + 8):
        following = []
        for k in range(width):
            if k > 0:
                incoming = alloc[k - 1].carries
            else:
                incoming = alloc[width - 1].carries if wrap else 0
            excess = counts[k] + incoming - height
            if excess <= 0:
                following.append(StageAllocation())
                continue
            fas, has = excess // 2, excess % 2
            if 3 * fas + 2 * has > counts[k]:
                fas, has = -(-excess // 2), 0
                if 3 * fas > counts[k]:
                    return None
            following.append(StageAllocation(full_adders=fas, half_adders=has))
        if following == alloc:
            return alloc
        alloc = following
    return None


def schedule_stage(counts: Sequence[int], target: int, wrap: bool) -> List[StageAllocation]:
    """
    Adders for one stage: Dadda-height allocation, or greedy FA packing when
    no allocation reaches the stage height with the bits available.
    """
    height = _stage_height(counts, target)
    alloc = _allocate(counts, height, wrap)
    if alloc is None:
        logger.debug(f"No allocation reaches height {height} for {list(counts)}; packing FAs greedily")
        alloc = [StageAllocation(full_adders=c // 3 if c > target else 0) for c in counts]
    return alloc


def emit_reduction(builder: NetlistBuilder, classes: List[List[Signal]], target: int,
                   eac: EacPolicy, label: str = "CSA stage"
                   ) -> Tuple[List[List[Signal]], ShorthandTable, List[int]]:
    """
    Emit CSA stages into builder until every class holds at most target bits.

    Args:
        builder: Builder receiving the FA/HA gates
        classes: classes[k] holds the signals of weight class k
        target: Bits per class to stop at (>= 2)
        eac: Treatment of carries leaving the top class
        label: Prefix of the ledger source names

    Returns:
        (remaining classes, shorthand table, signed charge per stage)
    """
    if target < 2:
        raise ImpossibleTargetError(f"carry-save reduction cannot go below 2 bits per class, got {target}")
    width = len(classes)
    wrap = eac != EacPolicy.NONE
    current = [list(bits) for bits in classes]
    stages: List[ShorthandStage] = []
    charges: List[int] = []

    while max(len(bits) for bits in current) > target:
        counts = [len(bits) for bits in current]
        alloc = schedule_stage(counts, target, wrap)
        if not any(a.carries for a in alloc):
            raise ImpossibleTargetError(f"no progress reducing {counts} to {target} bits per class")
        sums: List[List[Signal]] = [[] for _ in range(width)]
        carries: List[List[Signal]] = [[] for _ in range(width)]
        leftovers: List[List[Signal]] = []
        for k, bits in enumerate(current):
            cursor = 0
            for _ in range(alloc[k].full_adders):
                s, c = builder.full_adder(*bits[cursor:cursor + 3])
                cursor += 3
                sums[k].append(s)
                carries[k].append(c)
            for _ in range(alloc[k].half_adders):
                s, c = builder.half_adder(*bits[cursor:cursor + 2])
                cursor += 2
                sums[k].append(s)
                carries[k].append(c)
            leftovers.append(bits[cursor:])

        wrapped = len(carries[width - 1])
        charge = 0
        following: List[List[Signal]] = []
        for k in range(width):
            arriving = []
            if k > 0:
                arriving = [c.with_class(k) for c in carries[k - 1]]
            elif eac == EacPolicy.PLAIN:
                arriving = [c.with_class(0) for c in carries[width - 1]]
            elif eac == EacPolicy.INVERTED:
                arriving = [c.with_class(0).invert() for c in carries[width - 1]]
                charge = -wrapped
            following.append(leftovers[k] + sums[k] + arriving)

        stage = ShorthandStage(entering=counts, allocations=alloc,
                               wrapped_carries=wrapped if wrap else 0, correction=charge)
        stages.append(stage)
        charges.append(charge)
        logger.debug(f"{label} {len(stages)}: {[a.label() for a in alloc]} -> {[len(b) for b in following]}")
        current = following

    table = ShorthandTable(width=width, stages=stages,
                           final_counts=[len(bits) for bits in current], wrap=wrap)
    return current, table, charges


def reduce(pool: BitPool, target: int, eac: EacPolicy,
           ledger: Optional[CorrectionLedger] = None) -> Tuple[Netlist, ShorthandTable, int]:
    """
    Build the CSA tree that reduces a pool to target bits per class.

    Args:
        pool: Weight-class pool; the fragment has one input per pool signal,
              in class-major order
        target: Bits per class to reach, at least 2
        eac: End-around carry policy
        ledger: When given, each stage's inverted-carry charge is recorded on it

    Returns:
        (fragment with output port "cs" holding exactly target signals per class
        and the pool correction plus the stage charges, shorthand table, signed
        sum of the stage charges)
    """
    if target < 2:
        raise ImpossibleTargetError(f"carry-save reduction cannot go below 2 bits per class, got {target}")
    m: Modulus = pool.modulus
    flat = pool.flatten()
    builder = NetlistBuilder(m, [s.weight_class for s in flat])
    classes: List[List[Signal]] = [[] for _ in range(pool.width)]
    for signal in builder.input_signals():
        classes[signal.weight_class].append(signal)

    remaining, table, charges = emit_reduction(builder, classes, target, eac)
    for stage_number, charge in enumerate(charges, start=1):
        if charge and ledger is not None:
            ledger.charge(charge, f"CSA stage {stage_number}")
    delta = sum(charges)

    signals: List[Signal] = []
    for k, bits in enumerate(remaining):
        signals.extend(bits)
        signals.extend(builder.const(0, k) for _ in range(target - len(bits)))
    correction = (pool.source.output.correction + delta) % m.value()
    port = PlainResidue(name="cs", modulus=m, signals=signals, correction=correction, canonical=False)
    return builder.build([port]), table, delta
