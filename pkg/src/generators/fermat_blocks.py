"""
Modulo 2^n+1 building blocks of the diminished-1 path
"""

import logging
from typing import List, Sequence, Tuple

from src.common.errors import WidthMismatchError
from src.common.models import D1Output, D1Value, Modulus, Netlist, PlainResidue, Signal
from src.modmath import d1_encode
from src.netlist import NetlistBuilder

from .adders import increment, ripple_add

logger = logging.getLogger(__name__)


def csa_stage_ferm(builder: NetlistBuilder, x: Sequence[Signal], y: Sequence[Signal],
                   z: Sequence[Signal]) -> Tuple[List[Signal], List[Signal]]:
    """
    One row of n full adders with an inverted end-around carry.

    The carry vector is rotated left by one position and its wrapped MSB is
    complemented, so that |x + y + z|_{2^n+1} = |c_rot + s - 1|_{2^n+1}.

    Args:
        builder: Target builder
        x, y, z: n-bit operands, LSB first

    Returns:
        (c_rot, s), both n bits with bit i in weight class i
    """
    n = len(x)
    if len(y) != n or len(z) != n:
        raise WidthMismatchError(f"operand widths differ: {len(x)}, {len(y)}, {len(z)}")
    sums: List[Signal] = []
    carries: List[Signal] = []
    for i in range(n):
        s, c = builder.full_adder(x[i].with_class(i), y[i].with_class(i), z[i].with_class(i))
        sums.append(s)
        carries.append(c)
    c_rot = [carries[n - 1].with_class(0).invert()] + [carries[i - 1].with_class(i) for i in range(1, n)]
    return c_rot, sums


def final_adder_ferm_d1(builder: NetlistBuilder, a: Sequence[Signal], b: Sequence[Signal],
                        modulus: Modulus, name: str = "d1") -> D1Output:
    """
    Final adder with diminished-1 output of |a + b + 2|_{2^n+1}.

    Ripple-adds a and b, then increments the sum by the complemented carry
    out. The carry of that increment is the zero flag: it fires exactly when
    a + b + 2 = 2^n + 1, which leaves an all-zero magnitude.
    """
    if len(a) != len(b) or len(a) != modulus.n:
        raise WidthMismatchError(f"D1 final adder expects two {modulus.n}-bit operands, got {len(a)} and {len(b)}")
    sums, carry = ripple_add(builder, a, b)
    magnitude, zero = increment(builder, sums, carry.invert())
    return D1Output(name=name, modulus=modulus, zero=zero.with_class(0), magnitude=magnitude)


def d1_add_plus_two(a: int, b: int, n: int) -> D1Value:
    """Behavioral contract of final_adder_ferm_d1."""
    return d1_encode((a + b + 2) % ((1 << n) + 1), n)


def _operand(builder: NetlistBuilder, index: int, n: int) -> List[Signal]:
    return [builder.input(index * n + i) for i in range(n)]


def property1_netlist(n: int) -> Netlist:
    """
    A lone csa_stage_ferm row over inputs x, y, z (3n bits, operand-major).

    Ports: "c_rot" and "s" (plain n-bit vectors) and "sum", the carry-save
    pair read modulo 2^n+1 with the -1 correction applied.
    """
    m = Modulus.fermat(n)
    builder = NetlistBuilder(m, [i for _ in range(3) for i in range(n)])
    c_rot, s = csa_stage_ferm(builder, *(_operand(builder, j, n) for j in range(3)))
    return builder.build([
        PlainResidue(name="c_rot", modulus=m, signals=c_rot),
        PlainResidue(name="s", modulus=m, signals=s),
        PlainResidue(name="sum", modulus=m, signals=c_rot + s, correction=m.value() - 1, canonical=False),
    ])


def property2_netlist(n: int) -> Netlist:
    """A lone final_adder_ferm_d1 over inputs a, b (2n bits, operand-major)."""
    m = Modulus.fermat(n)
    builder = NetlistBuilder(m, [i for _ in range(2) for i in range(n)])
    port = final_adder_ferm_d1(builder, _operand(builder, 0, n), _operand(builder, 1, n), m)
    return builder.build([port])
