"""
Equivalence sweeps of generator netlists against the reference oracle
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.common.errors import BudgetExceededError, ResidueGenError, WidthMismatchError
from src.common.models import (
    RANDOM_GENERATOR,
    D1Output,
    GeneratorSpec,
    Netlist,
    SweepMode,
    SweepPlan,
    Verdict,
)
from src.common.utils.log_config import sweep_progress
from src.common.utils.settings import Settings
from src.generators import build_generator
from src.modmath import bits_to_int, oracle_residues
from src.netlist import simulate_ports

logger = logging.getLogger(__name__)

# (smallest failing input value, port name), or None when the chunk passes
ChunkResult = Optional[Tuple[int, str]]


def exhaustive_bits(p: int, start: int, stop: int) -> np.ndarray:
    """(p, stop - start) bit matrix of the input values start..stop-1."""
    values = np.arange(start, stop, dtype=np.uint64)
    shifts = np.arange(p, dtype=np.uint64)[:, None]
    return ((values[None, :] >> shifts) & np.uint64(1)).astype(np.uint8)


def random_bits(p: int, count: int, seed_sequence: np.random.SeedSequence) -> np.ndarray:
    """Uniform (p, count) bit matrix, i.e. count inputs uniform over [0, 2^p)."""
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    return rng.integers(0, 2, size=(p, count), dtype=np.uint8)


def mismatches(nl: Netlist, bits: np.ndarray) -> Tuple[np.ndarray, List[str]]:
    """
    Compare every port against the oracle over one chunk.

    Returns:
        (boolean mask of failing columns, name of the first failing port per column)
    """
    count = bits.shape[1]
    failing = np.zeros(count, dtype=bool)
    names = [""] * count
    readings = simulate_ports(nl, bits)
    for port in nl.outputs:
        expected = oracle_residues(bits, port.modulus)
        got = readings[port.name]
        if isinstance(port, D1Output):
            zero = (expected == 0).astype(np.int64)
            magnitude = np.where(expected == 0, 0, expected - 1)
            bad = (got.zero != zero) | (got.magnitude != magnitude)
        else:
            bad = got.value != expected
        for column in np.flatnonzero(bad & ~failing):
            names[column] = port.name
        failing |= bad
    return failing, names


def _check_chunk(nl: Netlist, bits: np.ndarray) -> ChunkResult:
    failing, names = mismatches(nl, bits)
    if not failing.any():
        return None
    columns = np.flatnonzero(failing)
    if bits.shape[0] <= 62:
        shifts = np.arange(bits.shape[0], dtype=np.int64)[:, None]
        values = (bits[:, columns].astype(np.int64) << shifts).sum(axis=0)
        best = int(np.argmin(values))
        return int(values[best]), names[columns[best]]
    return min((bits_to_int(bits[:, c].tolist()), names[c]) for c in columns)


def _chunks(plan: SweepPlan, chunk_size: int) -> Iterator[Tuple[str, object]]:
    if plan.mode == SweepMode.EXHAUSTIVE:
        total = 1 << plan.p
        for start in range(0, total, chunk_size):
            yield "range", (start, min(start + chunk_size, total))
    else:
        sizes = [chunk_size] * (plan.samples // chunk_size)
        if plan.samples % chunk_size:
            sizes.append(plan.samples % chunk_size)
        children = np.random.SeedSequence(plan.seed).spawn(len(sizes))
        for size, child in zip(sizes, children):
            yield "random", (size, child)


def _materialize(plan: SweepPlan, chunk: Tuple[str, object]) -> np.ndarray:
    kind, args = chunk
    if kind == "range":
        return exhaustive_bits(plan.p, *args)
    return random_bits(plan.p, *args)


def run_sweep(plan: SweepPlan, netlist: Optional[Netlist] = None,
              settings: Optional[Settings] = None) -> Verdict:
    """
    Compare a generator with the oracle over the planned input set.

    Args:
        plan: What to sweep
        netlist: Circuit under test; built from plan.family when omitted
        settings: Chunk size and worker count (defaults when omitted)

    Returns:
        Verdict whose counterexample, if any, is the smallest failing input value

    Raises:
        BudgetExceededError: exhaustive sweep larger than plan.budget
    """
    settings = settings or Settings()
    if netlist is None:
        if plan.family is None:
            raise ResidueGenError("a sweep needs a netlist or a generator family")
        netlist = build_generator(GeneratorSpec(p=plan.p, n=plan.n, family=plan.family))
    if netlist.p != plan.p:
        raise WidthMismatchError(f"plan sweeps {plan.p} inputs but the netlist has {netlist.p}")
    if plan.mode == SweepMode.EXHAUSTIVE and plan.vector_count > plan.budget:
        raise BudgetExceededError(
            f"exhaustive sweep of 2^{plan.p} vectors exceeds the budget of {plan.budget}; use random mode"
        )

    family = plan.family.value if plan.family else "netlist"
    name = f"{family} p={plan.p} n={plan.n} {plan.mode.value}"
    logger.info(f"Sweeping {name}: {plan.vector_count} vectors")

    def work(chunk) -> ChunkResult:
        return _check_chunk(netlist, _materialize(plan, chunk))

    chunks = list(_chunks(plan, settings.chunk_size))
    results: List[ChunkResult] = []
    with sweep_progress(len(chunks), name) as advance:
        if settings.workers > 1:
            with ThreadPoolExecutor(max_workers=settings.workers) as pool:
                for result in pool.map(work, chunks):
                    results.append(result)
                    advance()
        else:
            for chunk in chunks:
                results.append(work(chunk))
                advance()

    failures = [result for result in results if result is not None]
    random_mode = plan.mode == SweepMode.RANDOM
    common = dict(
        name=name,
        evaluated=plan.vector_count,
        generator=RANDOM_GENERATOR if random_mode else None,
        seed=plan.seed if random_mode else None,
    )
    if not failures:
        logger.info(f"{name}: pass")
        return Verdict(passed=True, **common)
    counterexample, port = min(failures)
    logger.error(f"{name}: mismatch on port {port} for X={counterexample}")
    return Verdict(passed=False, counterexample=counterexample, failing_port=port, **common)
