"""
Gate counts and logic depth
"""

from typing import Dict, Set

from src.common.models import GLUE_KINDS, CostReport, GateKind, Netlist


def cost(nl: Netlist) -> CostReport:
    """
    Count adders, inverters and glue gates and measure the longest path.

    An inverted read counts one inverter per distinct wire, no matter how many
    readers share it. FA, HA and glue gates add one level of depth; NOT and
    constants add none.
    """
    inverted: Set[int] = set()
    level: Dict[int, int] = {wire: 0 for wire in nl.primary_inputs}
    fa = ha = nots = glue = 0
    for gate in nl.gates:
        for signal in gate.inputs:
            if signal.inverted:
                inverted.add(signal.wire)
        arrival = max((level[s.wire] for s in gate.inputs), default=0)
        if gate.kind == GateKind.FA:
            fa += 1
            arrival += 1
        elif gate.kind == GateKind.HA:
            ha += 1
            arrival += 1
        elif gate.kind == GateKind.NOT:
            nots += 1
        elif gate.kind in GLUE_KINDS:
            glue += 1
            arrival += 1
        for wire in gate.outputs:
            level[wire] = arrival
    depth = 0
    for port in nl.outputs:
        for signal in port.signals:
            if signal.inverted:
                inverted.add(signal.wire)
            depth = max(depth, level[signal.wire])
    return CostReport(fa_count=fa, ha_count=ha, not_count=nots + len(inverted), glue_count=glue, depth=depth)
