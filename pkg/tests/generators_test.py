"""
Tests for the residue generator builders and their blocks
"""
from functools import lru_cache

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.common.errors import WidthMismatchError
from src.common.models import D1Value, GeneratorFamily, GeneratorSpec, Modulus, PlainResidue, SweepMode, SweepPlan
from src.generators import (
    all_ones,
    bi_core_netlist,
    build_bi_residue,
    build_classic_fermat,
    build_classic_mersenne,
    build_generator,
    build_universal_d1,
    csa_stage_ferm,
    d1_add_plus_two,
    d1_core_netlist,
    fermat_final_netlist,
    increment,
    mersenne_final_netlist,
    mux,
    property1_netlist,
    property2_netlist,
    ripple_add,
)
from src.modmath import d1_encode, int_to_bits
from src.netlist import NetlistBuilder, evaluate
from src.verify import run_sweep


def sweep(family: GeneratorFamily, p: int, n: int, settings, **kwargs):
    return run_sweep(SweepPlan(p=p, n=n, family=family, **kwargs), settings=settings)


@lru_cache(maxsize=None)
def universal(p: int, n: int):
    return build_universal_d1(p, n)


def test_csa_stage_all_zero():
    reading = evaluate(property1_netlist(3), [0] * 9)
    assert reading.ports["c_rot"].bits == [1, 0, 0]
    assert reading.ports["s"].bits == [0, 0, 0]
    assert reading.ports["sum"].value == 0


def test_csa_stage_all_ones():
    reading = evaluate(property1_netlist(3), [1] * 9)
    assert reading.ports["sum"].value == 21 % 9


def test_csa_stage_width_mismatch():
    builder = NetlistBuilder(Modulus.fermat(3), [0] * 8)
    signals = builder.input_signals()
    with pytest.raises(WidthMismatchError):
        csa_stage_ferm(builder, signals[:3], signals[3:6], signals[6:8])


@pytest.mark.parametrize("a,b,expected", [
    (0, 0, D1Value(x_z=0, magnitude=1)),
    (3, 4, D1Value(x_z=1, magnitude=0)),
    (7, 7, D1Value(x_z=0, magnitude=6)),
])
def test_final_adder(a, b, expected):
    reading = evaluate(property2_netlist(3), int_to_bits(a, 3) + int_to_bits(b, 3))
    assert reading.ports["d1"].d1 == expected
    assert d1_add_plus_two(a, b, 3) == expected


@pytest.mark.parametrize("x,expected", [(9, 2), (0, 0), (7, 0), (63, 0), (62, 6)])
def test_classic_mersenne_examples(x, expected):
    nl = build_classic_mersenne(6, 3)
    assert evaluate(nl, int_to_bits(x, 6)).output.value == expected


def test_classic_mersenne_exhaustive(settings):
    verdict = sweep(GeneratorFamily.CLASSIC_MERSENNE, 12, 3, settings)
    assert verdict.passed
    assert verdict.evaluated == 4096


@pytest.mark.parametrize("p,cor,blocks", [
    (16, 8, [-7, -7, -1]),
    (17, 6, [-7, -7, -3]),
    (18, 2, [-7, -7, -7]),
])
def test_classic_fermat_corrections(p, cor, blocks):
    report = build_classic_fermat(p, 3).report
    assert report.cor == cor
    assert report.block_corrections == blocks
    assert report.stage_corrections == [-2, -1, -1]


def test_classic_fermat_trees_differ_only_in_stage_one():
    tables = [build_classic_fermat(p, 3).report.front_end for p in (16, 17, 18)]
    for table in tables:
        assert [stage.entering for stage in table.stages[1:]] == [[4, 4, 4], [3, 3, 3]]


@pytest.mark.parametrize("p,n", [(16, 3), (9, 2), (5, 4)])
def test_classic_fermat_exhaustive(p, n, settings):
    assert sweep(GeneratorFamily.CLASSIC_FERMAT, p, n, settings).passed


def test_classic_fermat_csa_cost():
    assert build_classic_fermat(18, 3).report.front_cost.fa_count == 12
    report = build_classic_fermat(16, 3).report.front_cost
    assert (report.fa_count, report.ha_count) == (10, 2)


def test_classic_builders_reject_n1():
    with pytest.raises(ValueError):
        build_classic_fermat(4, 1)
    with pytest.raises(ValueError):
        build_classic_mersenne(4, 1)


def test_universal_zero_input():
    reading = evaluate(universal(16, 2), [0] * 16)
    assert reading.ports["d1"].d1 == d1_encode(0, 2)


def test_universal_example_value():
    x = 0x00BEEF
    reading = evaluate(universal(24, 3), int_to_bits(x, 24))
    assert reading.ports["d1"].d1 == d1_encode(x % 9, 3)


@pytest.mark.parametrize("p", range(8, 17))
def test_universal_exhaustive_n2(p, settings):
    assert sweep(GeneratorFamily.UNIVERSAL_D1, p, 2, settings).passed


@pytest.mark.parametrize("p", [12, 15, 18])
def test_universal_exhaustive_n3(p, settings):
    assert sweep(GeneratorFamily.UNIVERSAL_D1, p, 3, settings).passed


def test_universal_random_n3(settings):
    verdict = sweep(GeneratorFamily.UNIVERSAL_D1, 24, 3, settings, mode=SweepMode.RANDOM, samples=200_000)
    assert verdict.passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_universal_core_only_when_p_is_4n(n):
    report = build_universal_d1(4 * n, n).report
    assert report.front_end.stages == []
    assert report.front_cost.fa_count == 0
    assert report.cor == 0
    assert report.core_constant == 2


def test_universal_padding_is_reported(settings):
    report = build_universal_d1(5, 2).report
    assert report.padded
    assert (report.q, report.effective_q) == (2, 4)
    assert sweep(GeneratorFamily.UNIVERSAL_D1, 5, 2, settings).passed


@hypothesis_settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=2, max_value=4), extra=st.integers(min_value=0, max_value=12), data=st.data())
def test_universal_matches_oracle(n, extra, data):
    p = 4 * n + extra
    x = data.draw(st.integers(min_value=0, max_value=(1 << p) - 1))
    reading = evaluate(universal(p, n), int_to_bits(x, p))
    assert reading.ports["d1"].d1 == d1_encode(x % ((1 << n) + 1), n)


@pytest.mark.parametrize("p,n,shared", [(24, 3, 12), (32, 4, 16), (40, 4, 24)])
def test_bi_residue_shared_front_end(p, n, shared):
    report = build_bi_residue(p, n).report
    assert report.shared_fa_count == shared
    assert report.expected_shared_fa_count == shared


def test_bi_residue_zero_input():
    nl = build_bi_residue(24, 3)
    reading = evaluate(nl, [0] * 24)
    assert reading.ports["r"].value == 0
    assert reading.ports["d1"].d1 == D1Value(x_z=1, magnitude=0)


def test_bi_residue_exhaustive(settings):
    assert sweep(GeneratorFamily.BI_RESIDUE, 16, 2, settings).passed


def test_bi_residue_random(settings):
    verdict = sweep(GeneratorFamily.BI_RESIDUE, 32, 3, settings, mode=SweepMode.RANDOM,
                    samples=1_000_000, seed=42)
    assert verdict.passed
    assert verdict.seed == 42


@pytest.mark.parametrize("family", list(GeneratorFamily))
def test_registry_dispatch(family):
    nl = build_generator(GeneratorSpec(p=12, n=3, family=family))
    assert nl.report.family == family
    assert nl.p == 12


def operand_netlist(width: int, emit):
    """Two width-bit operands, a then b, feeding emit(builder, a, b) -> output bits."""
    m = Modulus.mersenne(max(width, 2))
    builder = NetlistBuilder(m, list(range(width)) * 2)
    inputs = builder.input_signals()
    bits = emit(builder, inputs[:width], inputs[width:])
    return builder.build([PlainResidue(name="r", modulus=m, signals=bits)])


def class_major(a: int, b: int, width: int):
    """Input bits a_0, b_0, a_1, b_1, ... of the final adder netlists."""
    return [bit for k in range(width) for bit in ((a >> k) & 1, (b >> k) & 1)]


def test_ripple_add_exhaustive():
    def emit(builder, a, b):
        sums, carry = ripple_add(builder, a, b)
        return sums + [carry]

    nl = operand_netlist(3, emit)
    for a in range(8):
        for b in range(8):
            assert evaluate(nl, int_to_bits(a, 3) + int_to_bits(b, 3)).output.bits == int_to_bits(a + b, 4)


def test_ripple_add_width_mismatch():
    builder = NetlistBuilder(Modulus.mersenne(3), [0, 1, 2, 0, 1])
    inputs = builder.input_signals()
    with pytest.raises(WidthMismatchError):
        ripple_add(builder, inputs[:3], inputs[3:])


def test_increment():
    builder = NetlistBuilder(Modulus.mersenne(3), [0, 1, 2, 0])
    inputs = builder.input_signals()
    sums, carry = increment(builder, inputs[:3], inputs[3])
    nl = builder.build([PlainResidue(name="r", modulus=Modulus.mersenne(3), signals=sums + [carry])])
    for a in range(8):
        for cin in (0, 1):
            assert evaluate(nl, int_to_bits(a, 3) + [cin]).output.bits == int_to_bits(a + cin, 4)


@pytest.mark.parametrize("sel", [0, 1])
@pytest.mark.parametrize("one", [0, 1])
@pytest.mark.parametrize("zero", [0, 1])
def test_mux_and_all_ones(sel, one, zero):
    builder = NetlistBuilder(Modulus.mersenne(2), [0, 0, 0])
    s, a, b = builder.input_signals()
    picked = mux(builder, s, a, b)
    every = all_ones(builder, [s, a, b])
    nl = builder.build([PlainResidue(name="r", modulus=Modulus.mersenne(2), signals=[picked, every.with_class(1)])])
    bits = evaluate(nl, [sel, one, zero]).output.bits
    assert bits == [one if sel else zero, int(sel and one and zero)]


def test_mersenne_final_adder_exhaustive():
    nl = mersenne_final_netlist(3)
    for a in range(8):
        for b in range(8):
            assert evaluate(nl, class_major(a, b, 3)).ports["r"].value == (a + b) % 7


@pytest.mark.parametrize("constant", [0, 2, 8])
def test_fermat_final_adder_exhaustive(constant):
    nl = fermat_final_netlist(3, constant)
    assert len(nl.output.signals) == 4
    for a in range(8):
        for b in range(8):
            assert evaluate(nl, class_major(a, b, 3)).ports["r"].value == (a + b + constant) % 9


@pytest.mark.parametrize("n", [2, 3])
def test_d1_core_exhaustive(n):
    nl = d1_core_netlist(n)
    width = 2 * n
    modulus = (1 << n) + 1
    for c in range(1 << width):
        for s in range(1 << width):
            reading = evaluate(nl, class_major(c, s, width))
            assert reading.ports["d1"].d1 == d1_encode((c + s) % modulus, n)


def test_bi_core_exhaustive_n2():
    nl = bi_core_netlist(2)
    assert [port.name for port in nl.outputs] == ["r", "d1"]
    for c in range(16):
        for s in range(16):
            reading = evaluate(nl, class_major(c, s, 4))
            assert reading.ports["r"].value == (c + s) % 3
            assert reading.ports["d1"].d1 == d1_encode((c + s) % 5, 2)
