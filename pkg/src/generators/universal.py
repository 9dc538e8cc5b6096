"""
Diminished-1 residue generators mod 2^n+1 and the shared bi-residue generator.

The p input bits are first reduced modulo 2^(2n)-1 by an inversion-free CSA
tree with plain end-around carry, leaving a carry-save pair (D_C, D_S) of
2n-bit vectors. Since 2^n = -1 modulo 2^n+1,

    X = D_C,L - D_C,H + D_S,L - D_S,H
      = D_C,L + ~D_C,H + D_S,L + ~D_S,H + 4        (mod 2^n+1)

Two inverted-EAC carry-save rows each owe -1, which leaves the constant +2
absorbed by the final D1 adder. Nothing in the circuit depends on p beyond
the size of the front-end tree.
"""

import logging
from typing import List, Tuple

from src.common.models import (
    BuildReport,
    CorrectionLedger,
    D1Output,
    EacPolicy,
    GeneratorFamily,
    GeneratorSpec,
    Modulus,
    Netlist,
    PlainResidue,
    ShorthandTable,
    Signal,
    SplitVectors,
)
from src.csa import build_pool, emit_reduction, reduce
from src.netlist import NetlistBuilder, compose, cost, wire_by_position

from .classic import mersenne_adder
from .fermat_blocks import csa_stage_ferm, final_adder_ferm_d1

logger = logging.getLogger(__name__)

CORE_CONSTANT = 2


def _core_builder(n: int, m: Modulus) -> NetlistBuilder:
    """4n inputs, class-major pairs C_0, S_0, ..., C_{2n-1}, S_{2n-1}."""
    return NetlistBuilder(m, [k for k in range(2 * n) for _ in range(2)])


def _split(builder: NetlistBuilder, n: int) -> SplitVectors:
    carry = [builder.input(2 * k) for k in range(2 * n)]
    save = [builder.input(2 * k + 1) for k in range(2 * n)]
    return SplitVectors(carry=carry, save=save)


def _high_as_low(bits: List[Signal]) -> List[Signal]:
    return [bit.with_class(i) for i, bit in enumerate(bits)]


def emit_d1_core(builder: NetlistBuilder, split: SplitVectors, m: Modulus) -> D1Output:
    """Two inverted-EAC CSA rows and the D1 final adder."""
    c1, s1 = csa_stage_ferm(
        builder,
        split.carry_low,
        [bit.invert() for bit in _high_as_low(split.carry_high)],
        split.save_low,
    )
    c2, s2 = csa_stage_ferm(builder, c1, s1, [bit.invert() for bit in _high_as_low(split.save_high)])
    return final_adder_ferm_d1(builder, c2, s2, m)


def emit_mersenne_tail(builder: NetlistBuilder, split: SplitVectors, n: int) -> PlainResidue:
    """|D_C,H + D_C,L + D_S,H + D_S,L|_{2^n-1}: a four-operand plain-EAC tree and EAC adder."""
    m = Modulus.mersenne(n)
    classes = [
        [split.carry_high[k].with_class(k), split.carry_low[k], split.save_high[k].with_class(k), split.save_low[k]]
        for k in range(n)
    ]
    remaining, _, _ = emit_reduction(builder, classes, 2, EacPolicy.PLAIN, label="Mersenne tail stage")
    bits = mersenne_adder(builder, [pair[0] for pair in remaining], [pair[1] for pair in remaining])
    return PlainResidue(name="r", modulus=m, signals=bits)


def d1_core_netlist(n: int) -> Netlist:
    """The p-independent four-operand core with D1 output."""
    m = Modulus.fermat(n)
    builder = _core_builder(n, m)
    port = emit_d1_core(builder, _split(builder, n), m)
    return builder.build([port])


def bi_core_netlist(n: int) -> Netlist:
    """D1 core and Mersenne tail reading the same carry-save pair. Ports: "r", "d1"."""
    m = Modulus.fermat(n)
    builder = _core_builder(n, m)
    split = _split(builder, n)
    residue = emit_mersenne_tail(builder, split, n)
    d1 = emit_d1_core(builder, split, m)
    return builder.build([residue, d1])


def _front_end(p: int, n: int) -> Tuple[Netlist, Netlist, ShorthandTable, CorrectionLedger]:
    """Inversion-free reduction of the input modulo 2^(2n)-1 to two bits per class."""
    pool, ledger = build_pool(p, Modulus.double_mersenne(n))
    fragment, table, _ = reduce(pool, 2, EacPolicy.PLAIN, ledger)
    front = compose(pool.source, fragment, wire_by_position(pool.source, fragment))
    return front, fragment, table, ledger


def _build(p: int, n: int, family: GeneratorFamily, core: Netlist) -> Netlist:
    spec = GeneratorSpec(p=p, n=n, family=family)
    front, fragment, table, ledger = _front_end(p, n)
    netlist = compose(front, core, wire_by_position(front, core))
    front_cost = cost(fragment)
    shared = None
    expected = None
    if family == GeneratorFamily.BI_RESIDUE:
        shared = front_cost.fa_count
        expected = max(p - 4 * n, 0)
    report = BuildReport(
        family=family,
        p=p,
        n=n,
        q=spec.q,
        effective_q=spec.effective_q,
        padded=spec.padded,
        cor=ledger.accumulated,
        core_constant=CORE_CONSTANT,
        shared_fa_count=shared,
        expected_shared_fa_count=expected,
        front_end=table,
        front_cost=front_cost,
        cost=cost(netlist),
    )
    if spec.padded:
        logger.info(f"p={p} gives {spec.q} blocks of {2 * n} bits; padded to {spec.effective_q}")
    logger.info(f"Built {family.value} p={p} n={n}: {report.cost.fa_count} FAs, "
                f"{report.cost.ha_count} HAs, front-end {front_cost.fa_count} FAs")
    return netlist.model_copy(update={"report": report})


def build_universal_d1(p: int, n: int) -> Netlist:
    """Residue generator mod 2^n+1 with diminished-1 output and no p-dependent correction."""
    return _build(p, n, GeneratorFamily.UNIVERSAL_D1, d1_core_netlist(n))


def build_bi_residue(p: int, n: int) -> Netlist:
    """
    Residues mod 2^n-1 (port "r") and mod 2^n+1 in D1 form (port "d1") from
    one shared front-end tree.
    """
    return _build(p, n, GeneratorFamily.BI_RESIDUE, bi_core_netlist(n))
