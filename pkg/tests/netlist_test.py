"""
Tests for netlist construction, evaluation, cost and composition
"""
import itertools

import numpy as np
import pytest
from pydantic import ValidationError

from src.common.errors import CompositionError, WidthMismatchError
from src.common.models import Gate, GateKind, Modulus, Netlist, PlainResidue, Signal
from src.netlist import NetlistBuilder, compose, cost, evaluate, passthrough, simulate, wire_by_position

M7 = Modulus.mersenne(3)


def single_fa() -> Netlist:
    builder = NetlistBuilder(M7, [0, 0, 0])
    s, c = builder.full_adder(*builder.input_signals())
    return builder.build([PlainResidue(name="sc", modulus=M7, signals=[s, c])])


def test_single_fa_truth_table():
    nl = single_fa()
    reading = evaluate(nl, [1, 1, 0]).output
    assert reading.bits == [0, 1]
    for bits in itertools.product([0, 1], repeat=3):
        assert evaluate(nl, list(bits)).output.value == sum(bits)


def test_evaluate_width_mismatch():
    with pytest.raises(WidthMismatchError):
        evaluate(single_fa(), [1, 0])


def test_simulate_is_bit_parallel():
    nl = single_fa()
    bits = np.array([[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]], dtype=np.uint8)
    values = simulate(nl, bits)
    s_wire, c_wire = nl.gates[0].outputs
    assert values[s_wire].tolist() == [0, 1, 0, 1]
    assert values[c_wire].tolist() == [0, 0, 1, 1]


def test_inverted_reads_are_honored():
    builder = NetlistBuilder(M7, [0])
    x = builder.input(0)
    s, c = builder.half_adder(x, x.invert())
    nl = builder.build([PlainResidue(name="sc", modulus=M7, signals=[s, c])])
    for bit in (0, 1):
        assert evaluate(nl, [bit]).output.bits == [1, 0]


def test_constants_are_shared():
    builder = NetlistBuilder(M7, [0])
    zero_a = builder.const(0, 0)
    zero_b = builder.const(0, 2)
    assert zero_a.wire == zero_b.wire
    assert builder.gate_count == 1


def test_netlist_rejects_undriven_reads():
    with pytest.raises(ValidationError):
        Netlist(
            p=1, n=3, modulus=M7, primary_inputs=[0], input_classes=[0],
            gates=[Gate(id=0, kind=GateKind.NOT, inputs=[Signal(wire=5)], outputs=[1])],
            wire_count=6,
        )


def test_netlist_rejects_double_drivers():
    with pytest.raises(ValidationError):
        Netlist(
            p=1, n=3, modulus=M7, primary_inputs=[0], input_classes=[0],
            gates=[Gate(id=0, kind=GateKind.NOT, inputs=[Signal(wire=0)], outputs=[0])],
            wire_count=1,
        )


def test_gate_arity_is_checked():
    with pytest.raises(ValidationError):
        Gate(id=0, kind=GateKind.FA, inputs=[Signal(wire=0)], outputs=[1, 2])


def test_passthrough_cost_is_zero():
    report = cost(passthrough(8, M7))
    assert (report.fa_count, report.ha_count, report.not_count, report.depth) == (0, 0, 0, 0)


def test_cost_counts_depth_and_inverters():
    builder = NetlistBuilder(M7, [0, 0, 0, 0])
    a, b, c, d = builder.input_signals()
    s1, _ = builder.full_adder(a, b.invert(), c)
    s2, c2 = builder.half_adder(s1, d.invert())
    inv = builder.inverter(c2)
    nl = builder.build([PlainResidue(name="o", modulus=M7, signals=[s2, inv])])
    report = cost(nl)
    assert report.fa_count == 1
    assert report.ha_count == 1
    assert report.not_count == 3
    assert report.depth == 2


def test_compose_with_empty_front_is_identity():
    back = single_fa()
    front = passthrough(3, M7, signals=[Signal(wire=i) for i in range(3)])
    whole = compose(front, back, wire_by_position(front, back))
    for bits in itertools.product([0, 1], repeat=3):
        assert evaluate(whole, list(bits)).output.value == evaluate(back, list(bits)).output.value
    assert cost(whole).fa_count == cost(front).fa_count + cost(back).fa_count


def test_compose_cancels_double_inversion():
    front = passthrough(1, M7, signals=[Signal(wire=0, inverted=True)])
    builder = NetlistBuilder(M7, [0])
    back = builder.build([PlainResidue(name="o", modulus=M7, signals=[builder.input(0).invert()])])
    whole = compose(front, back, wire_by_position(front, back))
    assert evaluate(whole, [0]).output.value == 0
    assert evaluate(whole, [1]).output.value == 1


def test_compose_rejects_dangling_input():
    back = single_fa()
    front = passthrough(3, M7, signals=[Signal(wire=i) for i in range(3)])
    wiring = wire_by_position(front, back)
    del wiring[back.primary_inputs[2]]
    with pytest.raises(CompositionError):
        compose(front, back, wiring)


def test_compose_rejects_class_mismatch():
    back = single_fa()
    front = passthrough(3, M7)
    with pytest.raises(CompositionError):
        compose(front, back, wire_by_position(front, back))


def test_wire_by_position_needs_matching_widths():
    with pytest.raises(CompositionError):
        wire_by_position(passthrough(2, M7), single_fa())
