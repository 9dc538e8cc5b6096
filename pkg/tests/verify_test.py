"""
Tests for sweeps, block contracts, goldens and plans
"""
import logging

import numpy as np
import pytest

from src.common.errors import BudgetExceededError, GoldenMissingError, ResidueGenError
from src.common.models import GeneratorFamily, Netlist, SweepMode, SweepPlan
from src.common.utils.log_config import configure_logging, sweep_progress
from src.common.utils.plan_loader import load_plan_from_file
from src.common.utils.settings import Settings
from src.generators import build_universal_d1
from src.modmath import d1_encode, int_to_bits
from src.netlist import evaluate
from src.verify import (
    check_goldens,
    check_nesting,
    check_property1,
    check_property2,
    check_sharing,
    check_zero_correction,
    random_bits,
    run_plan,
    run_sweep,
    sharing_report,
)


def corrupt_first_full_adder(nl: Netlist) -> Netlist:
    """Flip the inversion flag of one input of the first FA gate."""
    gates = list(nl.gates)
    index = next(i for i, g in enumerate(gates) if g.kind.value == "FA")
    gate = gates[index]
    inputs = [gate.inputs[0].invert(), *gate.inputs[1:]]
    gates[index] = gate.model_copy(update={"inputs": inputs})
    return nl.model_copy(update={"gates": gates})


def test_exhaustive_sweep_counts_vectors(settings):
    verdict = run_sweep(SweepPlan(p=16, n=2, family=GeneratorFamily.UNIVERSAL_D1), settings=settings)
    assert verdict.passed
    assert verdict.evaluated == 65536
    assert verdict.counterexample is None


def test_corrupted_netlist_yields_reproducible_counterexample(settings):
    nl = corrupt_first_full_adder(build_universal_d1(12, 2))
    verdict = run_sweep(SweepPlan(p=12, n=2), netlist=nl, settings=settings)
    assert not verdict.passed
    assert verdict.failing_port == "d1"
    x = verdict.counterexample
    assert evaluate(nl, int_to_bits(x, 12)).ports["d1"].d1 != d1_encode(x % 5, 2)


def test_sweep_needs_a_circuit():
    with pytest.raises(ResidueGenError):
        run_sweep(SweepPlan(p=8, n=2))


def test_exhaustive_budget_is_enforced():
    plan = SweepPlan(p=30, n=3, family=GeneratorFamily.UNIVERSAL_D1, budget=1 << 20)
    with pytest.raises(BudgetExceededError):
        run_sweep(plan)


def test_random_streams_are_reproducible():
    a = random_bits(20, 100, np.random.SeedSequence(42).spawn(1)[0])
    b = random_bits(20, 100, np.random.SeedSequence(42).spawn(1)[0])
    assert np.array_equal(a, b)


def test_random_sweep_is_deterministic(settings):
    plan = SweepPlan(mode=SweepMode.RANDOM, p=32, n=3, family=GeneratorFamily.BI_RESIDUE, samples=5000, seed=7)
    first = run_sweep(plan, settings=settings)
    second = run_sweep(plan, settings=settings)
    assert first == second
    assert first.generator is not None


def test_workers_do_not_change_the_verdict():
    nl = corrupt_first_full_adder(build_universal_d1(12, 2))
    plan = SweepPlan(p=12, n=2)
    serial = run_sweep(plan, netlist=nl, settings=Settings(chunk_size=512))
    threaded = run_sweep(plan, netlist=nl, settings=Settings(chunk_size=512, workers=4))
    assert serial == threaded


@pytest.mark.parametrize("n,evaluated", [(2, 64), (3, 512), (4, 4096)])
def test_property1(n, evaluated):
    verdict = check_property1(n)
    assert verdict.passed
    assert verdict.evaluated == evaluated


@pytest.mark.parametrize("n,evaluated", [(2, 16), (3, 64), (4, 256), (5, 1024)])
def test_property2(n, evaluated):
    verdict = check_property2(n)
    assert verdict.passed
    assert verdict.evaluated == evaluated


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nesting(n):
    assert check_nesting(n, 16).passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_zero_correction(n):
    assert check_zero_correction(n, list(range(4 * n, 16 * n + 1))).passed


@pytest.mark.parametrize("p,n", [(24, 3), (32, 4), (40, 4)])
def test_sharing(p, n):
    assert check_sharing(p, n).passed


def test_goldens(golden_dir):
    verdict = check_goldens(golden_dir)
    assert verdict.passed, verdict.details
    assert verdict.evaluated == 3


def test_missing_goldens(tmp_path):
    with pytest.raises(GoldenMissingError):
        check_goldens(tmp_path)


def test_quick_plan(repo_root, settings):
    verdicts = run_plan(load_plan_from_file(str(repo_root / "plans" / "quick.yml")), settings)
    assert verdicts
    assert all(v.passed for v in verdicts)


def test_sharing_report_costs():
    report = sharing_report(24, 3)
    assert report.saved_fa_count == 12
    assert report.saved_ha_count == 0
    assert report.expected_saving == 12
    assert report.front_end_fa_count == 12


def test_progress_is_silent_off_terminal():
    configure_logging(level=logging.WARNING, use_rich=False)
    calls = []
    with sweep_progress(4, "sweep") as advance:
        for _ in range(4):
            advance()
            calls.append(1)
    assert len(calls) == 4
    assert logging.getLogger("src").level == logging.WARNING
