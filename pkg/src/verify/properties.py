"""
Exhaustive checks of the modulo 2^n+1 block contracts and structural claims
"""

import logging
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.common.errors import OutOfRangeError
from src.common.models import CostReport, Modulus, ModulusKind, Verdict
from src.generators import build_bi_residue, build_classic_mersenne, build_universal_d1, property1_netlist, property2_netlist
from src.netlist import cost, simulate_ports

from .sweep import exhaustive_bits

logger = logging.getLogger(__name__)

MAX_CONTRACT_N = 6


def _operands(bits: np.ndarray, n: int, count: int) -> List[np.ndarray]:
    weights = (1 << np.arange(n, dtype=np.int64))[:, None]
    return [(bits[j * n:(j + 1) * n].astype(np.int64) * weights).sum(axis=0) for j in range(count)]


def _verdict(name: str, bad: np.ndarray, port: str) -> Verdict:
    if not bad.any():
        logger.info(f"{name}: pass over {bad.size} vectors")
        return Verdict(name=name, passed=True, evaluated=int(bad.size))
    counterexample = int(np.flatnonzero(bad)[0])
    logger.error(f"{name}: contract broken at input {counterexample}")
    return Verdict(name=name, passed=False, counterexample=counterexample, failing_port=port, evaluated=int(bad.size))


def check_property1(n: int) -> Verdict:
    """
    |x + y + z|_{2^n+1} = |c_rot + s - 1|_{2^n+1} for all n-bit x, y, z.

    The counterexample is the packed input x | y << n | z << 2n.
    """
    if n > MAX_CONTRACT_N:
        raise OutOfRangeError(f"exhaustive contract checks need n <= {MAX_CONTRACT_N}, got {n}")
    nl = property1_netlist(n)
    bits = exhaustive_bits(3 * n, 0, 1 << (3 * n))
    x, y, z = _operands(bits, n, 3)
    expected = (x + y + z) % Modulus.fermat(n).value()
    got = simulate_ports(nl, bits)["sum"].value
    return _verdict(f"csa_stage_ferm n={n}", got != expected, "sum")


def check_property2(n: int) -> Verdict:
    """The D1 final adder yields the canonical D1 form of |a + b + 2|_{2^n+1} for all n-bit a, b."""
    if n > MAX_CONTRACT_N:
        raise OutOfRangeError(f"exhaustive contract checks need n <= {MAX_CONTRACT_N}, got {n}")
    nl = property2_netlist(n)
    bits = exhaustive_bits(2 * n, 0, 1 << (2 * n))
    a, b = _operands(bits, n, 2)
    value = (a + b + 2) % Modulus.fermat(n).value()
    got = simulate_ports(nl, bits)["d1"]
    bad = (got.zero != (value == 0)) | (got.magnitude != np.where(value == 0, 0, value - 1))
    return _verdict(f"final_adder_ferm_d1 n={n}", bad, "d1")


def check_nesting(n: int, p: int) -> Verdict:
    """|X|_{2^n+-1} = ||X|_{2^2n-1}|_{2^n+-1} for every p-bit X."""
    values = np.arange(1 << p, dtype=np.int64)
    outer = Modulus.double_mersenne(n).value()
    bad = np.zeros(values.size, dtype=bool)
    for kind in (ModulusKind.MERSENNE_LIKE, ModulusKind.FERMAT_LIKE):
        m = Modulus(n=n, kind=kind).value()
        bad |= (values % outer) % m != values % m
    return _verdict(f"nesting n={n} p={p}", bad, "nested")


def check_zero_correction(n: int, widths: Sequence[int]) -> Verdict:
    """The D1 generator owes no correction and its front-end reads no inverted signal."""
    details = []
    for p in widths:
        report = build_universal_d1(p, n).report
        if report.cor != 0 or report.front_cost.not_count != 0:
            details.append(f"p={p}: COR={report.cor}, front-end inversions={report.front_cost.not_count}")
    name = f"zero correction n={n} p={widths[0]}..{widths[-1]}"
    if details:
        logger.error(f"{name}: {details}")
    return Verdict(name=name, passed=not details, evaluated=len(widths), details=details)


class SharingReport(BaseModel):
    """Cost of the two standalone generators against the bi-residue generator."""
    model_config = ConfigDict(frozen=True)

    p: int
    n: int
    standalone: CostReport
    shared: CostReport
    front_end_fa_count: int
    expected_saving: int

    @property
    def saved_fa_count(self) -> int:
        return self.standalone.fa_count - self.shared.fa_count

    @property
    def saved_ha_count(self) -> int:
        return self.standalone.ha_count - self.shared.ha_count


def sharing_report(p: int, n: int) -> SharingReport:
    mersenne = build_classic_mersenne(p, n).report.cost
    d1 = build_universal_d1(p, n).report.cost
    bi = build_bi_residue(p, n)
    standalone = mersenne + d1
    return SharingReport(
        p=p,
        n=n,
        standalone=standalone,
        shared=cost(bi),
        front_end_fa_count=bi.report.shared_fa_count,
        expected_saving=bi.report.expected_shared_fa_count,
    )


def check_sharing(p: int, n: int) -> Verdict:
    """The bi-residue generator saves exactly p - 4n full adders."""
    report = sharing_report(p, n)
    details = []
    if report.front_end_fa_count != report.expected_saving:
        details.append(f"front-end uses {report.front_end_fa_count} FAs, expected {report.expected_saving}")
    if report.saved_fa_count != report.expected_saving:
        details.append(f"saves {report.saved_fa_count} FAs, expected {report.expected_saving}")
    return Verdict(name=f"sharing p={p} n={n}", passed=not details, evaluated=1, details=details)
