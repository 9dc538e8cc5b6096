"""
Classic residue generators: weight-class CSA tree plus a modular final adder
"""

import logging
from typing import List, Sequence, Tuple

from src.common.models import (
    BuildReport,
    EacPolicy,
    GeneratorFamily,
    Modulus,
    Netlist,
    PlainResidue,
    Signal,
)
from src.csa import build_pool, reduce
from src.netlist import NetlistBuilder, compose, cost, wire_by_position

from .adders import all_ones, constant_bits, increment, mux, ripple_add

logger = logging.getLogger(__name__)


def _pair_inputs(n: int) -> List[int]:
    """Input classes of a two-operand adder fed class-major: A_0, B_0, A_1, B_1, ..."""
    return [k for k in range(n) for _ in range(2)]


def _operands(builder: NetlistBuilder, n: int) -> Tuple[List[Signal], List[Signal]]:
    a = [builder.input(2 * k) for k in range(n)]
    b = [builder.input(2 * k + 1) for k in range(n)]
    return a, b


def mersenne_adder(builder: NetlistBuilder, a: Sequence[Signal], b: Sequence[Signal]) -> List[Signal]:
    """
    |a + b|_{2^n-1} with end-around carry; 2^n-1 is cleared to 0.

    The increment by the carry out cannot overflow, so its carry is unused.
    """
    sums, carry = ripple_add(builder, a, b)
    wrapped, _ = increment(builder, sums, carry)
    clear = all_ones(builder, wrapped).invert()
    return [builder.and_gate(bit, clear.with_class(bit.weight_class)) for bit in wrapped]


def fermat_adder(builder: NetlistBuilder, a: Sequence[Signal], b: Sequence[Signal], constant: int) -> List[Signal]:
    """
    Normal (n+1)-bit |a + b + constant|_{2^n+1} for n-bit a, b and constant <= 2^n.

    T = a + b + constant stays below 3(2^n+1); T, T - M and T - 2M are formed
    over n+3 bits and the sign bits of the two differences pick the result.
    """
    n = len(a)
    m = (1 << n) + 1
    width = n + 3
    sums, carry = ripple_add(builder, a, b)
    total = sums + [carry]
    if constant:
        total, carry = ripple_add(builder, total, constant_bits(builder, constant, n + 1))
        total = total + [carry]
    else:
        total = total + [builder.const(0, n + 1)]
    total = total + [builder.const(0, n + 2)]

    minus_m, _ = ripple_add(builder, total, constant_bits(builder, (1 << width) - m, width))
    minus_2m, _ = ripple_add(builder, total, constant_bits(builder, (1 << width) - 2 * m, width))
    below_m = minus_m[width - 1]
    below_2m = minus_2m[width - 1]
    result = []
    for i in range(n + 1):
        low = mux(builder, below_m, total[i], minus_m[i])
        result.append(mux(builder, below_2m, low, minus_2m[i]).with_class(i))
    return result


def mersenne_final_netlist(n: int) -> Netlist:
    m = Modulus.mersenne(n)
    builder = NetlistBuilder(m, _pair_inputs(n))
    bits = mersenne_adder(builder, *_operands(builder, n))
    return builder.build([PlainResidue(name="r", modulus=m, signals=bits)])


def fermat_final_netlist(n: int, constant: int) -> Netlist:
    m = Modulus.fermat(n)
    builder = NetlistBuilder(m, _pair_inputs(n))
    bits = fermat_adder(builder, *_operands(builder, n), constant)
    return builder.build([PlainResidue(name="r", modulus=m, signals=bits)])


def _build_classic(p: int, m: Modulus, family: GeneratorFamily, eac: EacPolicy) -> Netlist:
    pool, ledger = build_pool(p, m)
    fragment, table, _ = reduce(pool, 2, eac, ledger)
    front = compose(pool.source, fragment, wire_by_position(pool.source, fragment))
    if family == GeneratorFamily.CLASSIC_FERMAT:
        back = fermat_final_netlist(m.n, ledger.accumulated)
    else:
        back = mersenne_final_netlist(m.n)
    netlist = compose(front, back, wire_by_position(front, back))
    report = BuildReport(
        family=family,
        p=p,
        n=m.n,
        q=-(-p // m.n),
        cor=ledger.accumulated,
        block_corrections=ledger.amounts("B"),
        stage_corrections=ledger.amounts("CSA"),
        front_end=table,
        front_cost=cost(fragment),
        cost=cost(netlist),
    )
    logger.info(f"Built {family.value} p={p} n={m.n}: COR={report.cor}, "
                f"{report.cost.fa_count} FAs, {report.cost.ha_count} HAs, depth {report.cost.depth}")
    return netlist.model_copy(update={"report": report})


def build_classic_mersenne(p: int, n: int) -> Netlist:
    """Residue generator mod 2^n-1 with canonical n-bit output."""
    return _build_classic(p, Modulus.mersenne(n), GeneratorFamily.CLASSIC_MERSENNE, EacPolicy.PLAIN)


def build_classic_fermat(p: int, n: int) -> Netlist:
    """
    Residue generator mod 2^n+1 with normal (n+1)-bit output.

    Odd n-bit blocks and wrapped carries enter complemented; the correction
    they accumulate depends on p and is added by the final adder.
    """
    return _build_classic(p, Modulus.fermat(n), GeneratorFamily.CLASSIC_FERMAT, EacPolicy.INVERTED)
