"""
Netlist model
"""

from typing import List, Optional, Set

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .circuit import Gate, OutputPort, Signal
from .generator import BuildReport
from .modulus import Modulus


class Netlist(BaseModel):
    """
    A combinational circuit of primitive gates in topological order.

    Attributes:
        p: Number of primary inputs
        n: Modulus parameter
        modulus: Main modulus of the circuit
        primary_inputs: Input wires, LSB first
        input_classes: Residue weight class of each input wire
        gates: Gates in topological order
        outputs: Output ports
        wire_count: Wire identifiers are below this bound
        report: Build report attached by the generators
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=0)
    n: int = Field(ge=1)
    modulus: Modulus
    primary_inputs: List[int]
    input_classes: List[int]
    gates: List[Gate] = Field(default_factory=list)
    outputs: List[OutputPort] = Field(default_factory=list)
    wire_count: int = Field(ge=0)
    report: Optional[BuildReport] = None

    @model_validator(mode="after")
    def check_structure(self):
        """Gates must be acyclic and every wire driven exactly once."""
        if len(self.primary_inputs) != self.p or len(self.input_classes) != self.p:
            raise ValueError("primary input list does not match p")
        driven: Set[int] = set()
        for wire in self.primary_inputs:
            self._drive(driven, wire)
        for gate in self.gates:
            for signal in gate.inputs:
                if signal.wire not in driven:
                    raise ValueError(f"gate {gate.id} reads wire {signal.wire} before it is driven")
            for wire in gate.outputs:
                self._drive(driven, wire)
        for port in self.outputs:
            for signal in port.signals:
                if signal.wire not in driven:
                    raise ValueError(f"output port {port.name} reads undriven wire {signal.wire}")
        return self

    def _drive(self, driven: Set[int], wire: int) -> None:
        if wire in driven:
            raise ValueError(f"wire {wire} is driven more than once")
        if wire >= self.wire_count:
            raise ValueError(f"wire {wire} is outside the declared wire range")
        driven.add(wire)

    @property
    def output(self) -> OutputPort:
        return self.outputs[0]

    def port(self, name: str) -> OutputPort:
        for port in self.outputs:
            if port.name == name:
                return port
        raise KeyError(name)

    def input_signals(self) -> List[Signal]:
        return [Signal(wire=w, weight_class=k) for w, k in zip(self.primary_inputs, self.input_classes)]
