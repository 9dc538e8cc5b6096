"""
Carry-propagate adder primitives built from FA/HA and glue gates.

All vectors are LSB first. Results are re-tagged so that bit i carries
weight class i, which is what canonical output ports expect.
"""

from typing import List, Optional, Sequence, Tuple

from src.common.errors import WidthMismatchError
from src.common.models import Signal
from src.netlist import NetlistBuilder


def _positional(bits: Sequence[Signal]) -> List[Signal]:
    return [bit.with_class(i) for i, bit in enumerate(bits)]


def ripple_add(builder: NetlistBuilder, a: Sequence[Signal], b: Sequence[Signal],
               cin: Optional[Signal] = None) -> Tuple[List[Signal], Signal]:
    """
    Ripple-carry addition of two equal-width vectors.

    Bit 0 uses a half adder unless a carry-in is given.

    Returns:
        (sum bits, carry out)
    """
    if len(a) != len(b):
        raise WidthMismatchError(f"cannot add vectors of width {len(a)} and {len(b)}")
    if not a:
        raise WidthMismatchError("cannot add empty vectors")
    a, b = _positional(a), _positional(b)
    sums: List[Signal] = []
    carry = cin.with_class(0) if cin is not None else None
    for x, y in zip(a, b):
        if carry is None:
            s, carry = builder.half_adder(x, y)
        else:
            s, carry = builder.full_adder(x, y, carry.with_class(x.weight_class))
        sums.append(s)
    return sums, carry.with_class(len(a))


def increment(builder: NetlistBuilder, a: Sequence[Signal], cin: Signal) -> Tuple[List[Signal], Signal]:
    """a + cin through a half-adder chain. Returns (sum bits, carry out)."""
    sums: List[Signal] = []
    carry = cin
    for x in _positional(a):
        s, carry = builder.half_adder(x, carry.with_class(x.weight_class))
        sums.append(s)
    return sums, carry.with_class(len(a))


def all_ones(builder: NetlistBuilder, bits: Sequence[Signal]) -> Signal:
    """AND of all bits."""
    result = bits[0]
    for bit in bits[1:]:
        result = builder.and_gate(result, bit)
    return result


def mux(builder: NetlistBuilder, sel: Signal, one: Signal, zero: Signal) -> Signal:
    """one when sel is 1, zero otherwise."""
    picked = builder.and_gate(sel, one.with_class(sel.weight_class))
    other = builder.and_gate(sel.invert(), zero.with_class(sel.weight_class))
    return builder.or_gate(picked, other)


def constant_bits(builder: NetlistBuilder, value: int, width: int) -> List[Signal]:
    """Shared CONST0/CONST1 signals spelling value over width bits."""
    return [builder.const((value >> i) & 1, i) for i in range(width)]
