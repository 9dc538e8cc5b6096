"""
Stitching netlist fragments together
"""

import logging
from typing import Dict, List, Mapping

from src.common.errors import CompositionError
from src.common.models import D1Output, Gate, Netlist, OutputPort, Signal

logger = logging.getLogger(__name__)


def wire_by_position(front: Netlist, back: Netlist, port_index: int = 0) -> Dict[int, Signal]:
    """
    Pair the i-th signal of a front port with the i-th primary input of back.

    Args:
        front: Netlist whose port feeds back
        back: Netlist with open primary inputs
        port_index: Which port of front to read

    Returns:
        Mapping back input wire -> front signal
    """
    if port_index >= len(front.outputs):
        raise CompositionError(f"front netlist has no output port {port_index}")
    signals = front.outputs[port_index].signals
    if len(signals) != back.p:
        raise CompositionError(f"front port carries {len(signals)} signals but back has {back.p} inputs")
    return {wire: signal for wire, signal in zip(back.primary_inputs, signals)}


def _exposed(front: Netlist) -> Dict[int, int]:
    """Wires visible on the front's ports, with their weight class."""
    exposed: Dict[int, int] = {}
    for port in front.outputs:
        for signal in port.signals:
            exposed.setdefault(signal.wire, signal.weight_class)
    return exposed


def compose(front: Netlist, back: Netlist, wiring: Mapping[int, Signal]) -> Netlist:
    """
    Feed the open inputs of back from signals of front.

    Args:
        front: Upstream netlist; its primary inputs become the result's inputs
        back: Downstream netlist; its ports become the result's ports
        wiring: back input wire -> front port signal (as built by wire_by_position)

    Returns:
        A single acyclic netlist. Back's gate wires are shifted above front's
        wire range; an input read inverted through an inverted signal cancels out.

    Raises:
        CompositionError: dangling input, signal not on a front port, or weight class mismatch
    """
    exposed = _exposed(front)
    for wire, weight_class in zip(back.primary_inputs, back.input_classes):
        if wire not in wiring:
            raise CompositionError(f"back input wire {wire} is not connected")
        source = wiring[wire]
        if source.wire not in exposed:
            raise CompositionError(f"wire {source.wire} is not an output of the front netlist")
        if source.weight_class != weight_class:
            raise CompositionError(
                f"back input wire {wire} has weight class {weight_class} "
                f"but is wired to a class {source.weight_class} signal"
            )
    inputs = set(back.primary_inputs)
    offset = front.wire_count

    def translate(signal: Signal) -> Signal:
        if signal.wire in inputs:
            source = wiring[signal.wire]
            return Signal(
                wire=source.wire,
                inverted=source.inverted != signal.inverted,
                weight_class=signal.weight_class,
            )
        return signal.model_copy(update={"wire": signal.wire + offset})

    gates: List[Gate] = list(front.gates)
    for gate in back.gates:
        gates.append(Gate(
            id=len(gates),
            kind=gate.kind,
            inputs=[translate(s) for s in gate.inputs],
            outputs=[wire + offset for wire in gate.outputs],
        ))

    outputs: List[OutputPort] = []
    for port in back.outputs:
        if isinstance(port, D1Output):
            outputs.append(port.model_copy(update={
                "zero": translate(port.zero),
                "magnitude": [translate(s) for s in port.magnitude],
            }))
        else:
            outputs.append(port.model_copy(update={"signals": [translate(s) for s in port.signals]}))

    logger.debug(f"Composed {len(front.gates)} + {len(back.gates)} gates over {front.p} inputs")
    return Netlist(
        p=front.p,
        n=back.n,
        modulus=back.modulus,
        primary_inputs=list(front.primary_inputs),
        input_classes=list(front.input_classes),
        gates=gates,
        outputs=outputs,
        wire_count=offset + back.wire_count,
    )
