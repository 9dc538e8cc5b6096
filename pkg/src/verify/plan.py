"""
Execution of YAML verification plans
"""

import logging
from typing import List, Optional

from src.common.models import SweepPlan, Verdict
from src.common.utils.plan_validator import PlanModel
from src.common.utils.settings import Settings

from .goldens import check_goldens
from .properties import check_nesting, check_property1, check_property2, check_sharing, check_zero_correction
from .sweep import run_sweep

logger = logging.getLogger(__name__)


def run_plan(plan: PlanModel, settings: Optional[Settings] = None) -> List[Verdict]:
    """
    Run every check a plan lists, in plan order: sweeps, contracts, nesting,
    zero correction, sharing and goldens.
    """
    settings = settings or Settings()
    verdicts: List[Verdict] = []
    for entry in plan.sweeps:
        for p in entry.widths():
            sweep = SweepPlan(
                mode=entry.mode,
                p=p,
                n=entry.n,
                family=entry.family,
                samples=entry.samples,
                seed=entry.seed if entry.seed is not None else settings.seed,
                budget=settings.exhaustive_budget,
            )
            verdicts.append(run_sweep(sweep, settings=settings))
    verdicts.extend(check_property1(n) for n in plan.property1)
    verdicts.extend(check_property2(n) for n in plan.property2)
    if plan.nesting is not None:
        for n in plan.nesting.n:
            verdicts.append(check_nesting(n, plan.nesting.p))
    if plan.zero_correction is not None:
        zc = plan.zero_correction
        for n in zc.n:
            verdicts.append(check_zero_correction(n, list(range(zc.p_from_multiple * n, zc.p_to_multiple * n + 1))))
    verdicts.extend(check_sharing(p, n) for p, n in plan.sharing)
    if plan.goldens:
        verdicts.append(check_goldens(settings.golden_dir))
    failed = sum(1 for v in verdicts if not v.passed)
    logger.info(f"Plan '{plan.name}': {len(verdicts)} checks, {failed} failed")
    return verdicts
