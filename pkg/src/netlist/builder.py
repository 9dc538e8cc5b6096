"""
Incremental netlist construction
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.common.models import Gate, GateKind, Modulus, Netlist, OutputPort, PlainResidue, Signal

logger = logging.getLogger(__name__)


class NetlistBuilder:
    """
    Emits gates in topological order and hands out fresh wires.

    Every method returns Signals; inversion is a flag on the Signal, so
    complementing a bit never costs a gate.
    """

    def __init__(self, modulus: Modulus, input_classes: Sequence[int]):
        """
        Args:
            modulus: Main modulus of the circuit being built
            input_classes: Weight class of each primary input, in input order
        """
        self.modulus = modulus
        self.input_classes = list(input_classes)
        self._gates: List[Gate] = []
        self._next_wire = 0
        self._constants: Dict[GateKind, int] = {}
        self.inputs: List[int] = [self._new_wire() for _ in self.input_classes]

    def _new_wire(self) -> int:
        wire = self._next_wire
        self._next_wire += 1
        return wire

    def _emit(self, kind: GateKind, inputs: Sequence[Signal], n_outputs: int) -> List[int]:
        outputs = [self._new_wire() for _ in range(n_outputs)]
        self._gates.append(Gate(id=len(self._gates), kind=kind, inputs=list(inputs), outputs=outputs))
        return outputs

    @property
    def gate_count(self) -> int:
        return len(self._gates)

    def input(self, index: int) -> Signal:
        return Signal(wire=self.inputs[index], weight_class=self.input_classes[index])

    def input_signals(self) -> List[Signal]:
        return [self.input(i) for i in range(len(self.inputs))]

    def const(self, bit: int, weight_class: int = 0) -> Signal:
        """A constant 0 or 1; one CONST gate per value is shared by all users."""
        kind = GateKind.CONST1 if bit else GateKind.CONST0
        if kind not in self._constants:
            self._constants[kind] = self._emit(kind, [], 1)[0]
        return Signal(wire=self._constants[kind], weight_class=weight_class)

    def full_adder(self, a: Signal, b: Signal, c: Signal) -> Tuple[Signal, Signal]:
        """Returns (sum, carry); the carry is one weight class above the sum."""
        s, co = self._emit(GateKind.FA, [a, b, c], 2)
        k = a.weight_class
        return Signal(wire=s, weight_class=k), Signal(wire=co, weight_class=k + 1)

    def half_adder(self, a: Signal, b: Signal) -> Tuple[Signal, Signal]:
        s, co = self._emit(GateKind.HA, [a, b], 2)
        k = a.weight_class
        return Signal(wire=s, weight_class=k), Signal(wire=co, weight_class=k + 1)

    def and_gate(self, a: Signal, b: Signal) -> Signal:
        return Signal(wire=self._emit(GateKind.AND, [a, b], 1)[0], weight_class=a.weight_class)

    def or_gate(self, a: Signal, b: Signal) -> Signal:
        return Signal(wire=self._emit(GateKind.OR, [a, b], 1)[0], weight_class=a.weight_class)

    def xor_gate(self, a: Signal, b: Signal) -> Signal:
        return Signal(wire=self._emit(GateKind.XOR, [a, b], 1)[0], weight_class=a.weight_class)

    def inverter(self, a: Signal) -> Signal:
        """An explicit NOT gate, for exporters that cannot express inverted reads."""
        return Signal(wire=self._emit(GateKind.NOT, [a], 1)[0], weight_class=a.weight_class)

    def build(self, outputs: Sequence[OutputPort], n: Optional[int] = None) -> Netlist:
        netlist = Netlist(
            p=len(self.inputs),
            n=n if n is not None else self.modulus.n,
            modulus=self.modulus,
            primary_inputs=list(self.inputs),
            input_classes=list(self.input_classes),
            gates=list(self._gates),
            outputs=list(outputs),
            wire_count=self._next_wire,
        )
        logger.debug(f"Built netlist: {len(self.inputs)} inputs, {len(self._gates)} gates, {len(outputs)} ports")
        return netlist


def passthrough(p: int, modulus: Modulus, signals: Optional[Sequence[Signal]] = None,
                correction: int = 0, name: str = "x") -> Netlist:
    """
    A gate-free netlist over p inputs (input i has weight class i).

    Args:
        p: Number of primary inputs
        modulus: Context modulus
        signals: Signals to expose on the output port; defaults to the inputs themselves
        correction: Correction attached to the output port
        name: Output port name

    Returns:
        Netlist with no gates and a single non-canonical plain port
    """
    builder = NetlistBuilder(modulus, range(p))
    exposed = list(signals) if signals is not None else builder.input_signals()
    port = PlainResidue(name=name, modulus=modulus, signals=exposed,
                        correction=correction % modulus.value(), canonical=False)
    return builder.build([port])
