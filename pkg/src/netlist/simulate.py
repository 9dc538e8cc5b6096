"""
Bit-parallel netlist evaluation.

Wire values are numpy uint8 arrays with one element per input vector, so one
pass over the gate list evaluates a whole chunk of vectors.
"""

from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from src.common.errors import WidthMismatchError
from src.common.models import D1Output, D1Value, GateKind, Netlist, OutputPort, Signal


class PortArrays(NamedTuple):
    """Decoded values of one output port over a chunk of vectors."""
    name: str
    bits: np.ndarray
    value: np.ndarray
    zero: Optional[np.ndarray] = None
    magnitude: Optional[np.ndarray] = None


class PortReading(BaseModel):
    bits: List[int]
    value: int
    d1: Optional[D1Value] = None


class Evaluation(BaseModel):
    """Result of evaluating one input vector."""
    ports: Dict[str, PortReading]

    @property
    def output(self) -> PortReading:
        return next(iter(self.ports.values()))


def _read(values: Dict[int, np.ndarray], signal: Signal) -> np.ndarray:
    bits = values[signal.wire]
    return bits ^ 1 if signal.inverted else bits


def simulate(nl: Netlist, bit_matrix: np.ndarray) -> Dict[int, np.ndarray]:
    """
    Evaluate every wire of the netlist.

    Args:
        nl: Netlist to evaluate
        bit_matrix: (p, N) array of 0/1, row i is primary input i

    Returns:
        Mapping wire -> uint8 array of N values
    """
    if bit_matrix.ndim != 2 or bit_matrix.shape[0] != nl.p:
        raise WidthMismatchError(f"expected {nl.p} input rows, got shape {bit_matrix.shape}")
    count = bit_matrix.shape[1]
    values: Dict[int, np.ndarray] = {}
    for row, wire in enumerate(nl.primary_inputs):
        values[wire] = bit_matrix[row].astype(np.uint8, copy=False)
    for gate in nl.gates:
        ins = [_read(values, signal) for signal in gate.inputs]
        kind = gate.kind
        if kind == GateKind.FA:
            a, b, c = ins
            values[gate.outputs[0]] = a ^ b ^ c
            values[gate.outputs[1]] = (a & b) | (a & c) | (b & c)
        elif kind == GateKind.HA:
            a, b = ins
            values[gate.outputs[0]] = a ^ b
            values[gate.outputs[1]] = a & b
        elif kind == GateKind.NOT:
            values[gate.outputs[0]] = ins[0] ^ 1
        elif kind == GateKind.CONST0:
            values[gate.outputs[0]] = np.zeros(count, dtype=np.uint8)
        elif kind == GateKind.CONST1:
            values[gate.outputs[0]] = np.ones(count, dtype=np.uint8)
        elif kind == GateKind.AND:
            values[gate.outputs[0]] = ins[0] & ins[1]
        elif kind == GateKind.OR:
            values[gate.outputs[0]] = ins[0] | ins[1]
        elif kind == GateKind.XOR:
            values[gate.outputs[0]] = ins[0] ^ ins[1]
        else:
            raise ValueError(f"unknown gate kind {kind}")
    return values


def _weighted(values: Dict[int, np.ndarray], signals: Sequence[Signal], use_classes: bool,
              modulus: Optional[int] = None) -> Optional[np.ndarray]:
    total = None
    for position, signal in enumerate(signals):
        shift = signal.weight_class if use_classes else position
        bits = _read(values, signal).astype(np.int64)
        if modulus is None:
            term = bits << shift
        else:
            term = bits * pow(2, shift, modulus)
        total = term if total is None else total + term
        if modulus is not None:
            total %= modulus
    return total


def read_port(values: Dict[int, np.ndarray], port: OutputPort, count: int) -> PortArrays:
    bits = np.array([_read(values, s) for s in port.signals], dtype=np.uint8).reshape(len(port.signals), count)
    if isinstance(port, D1Output):
        zero = _read(values, port.zero).astype(np.int64)
        magnitude = _weighted(values, port.magnitude, use_classes=False)
        if magnitude is None:
            magnitude = np.zeros(count, dtype=np.int64)
        return PortArrays(port.name, bits, (1 - zero) + magnitude, zero, magnitude)
    modulus = None if port.canonical else port.modulus.value()
    raw = _weighted(values, port.signals, use_classes=True, modulus=modulus)
    if raw is None:
        raw = np.zeros(count, dtype=np.int64)
    value = raw + port.correction
    if not port.canonical:
        value = value % port.modulus.value()
    return PortArrays(port.name, bits, value)


def simulate_ports(nl: Netlist, bit_matrix: np.ndarray) -> Dict[str, PortArrays]:
    """Evaluate a chunk of vectors and decode every output port."""
    values = simulate(nl, bit_matrix)
    count = bit_matrix.shape[1]
    return {port.name: read_port(values, port, count) for port in nl.outputs}


def evaluate(nl: Netlist, input_bits: Sequence[int]) -> Evaluation:
    """
    Evaluate a single input vector.

    Args:
        nl: Netlist
        input_bits: p bits, LSB first

    Returns:
        Raw bits of every port, their value, and the D1Value of D1 ports
    """
    if len(input_bits) != nl.p:
        raise WidthMismatchError(f"netlist has {nl.p} inputs, got {len(input_bits)} bits")
    matrix = np.array(list(input_bits), dtype=np.uint8).reshape(nl.p, 1)
    readings = {}
    for name, arrays in simulate_ports(nl, matrix).items():
        d1 = None
        if arrays.zero is not None:
            d1 = D1Value(x_z=int(arrays.zero[0]), magnitude=int(arrays.magnitude[0]))
        readings[name] = PortReading(bits=[int(b) for b in arrays.bits[:, 0]], value=int(arrays.value[0]), d1=d1)
    return Evaluation(ports=readings)
