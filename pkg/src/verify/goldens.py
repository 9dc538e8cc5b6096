"""
Comparison of generated shorthand tables and corrections with committed goldens
"""

import logging
from pathlib import Path
from typing import List

import yaml
from pydantic import BaseModel

from src.common.errors import GoldenMissingError
from src.common.models import Verdict
from src.csa import render_shorthand
from src.generators import build_classic_fermat

logger = logging.getLogger(__name__)

CORRECTIONS_FILE = "corrections.yml"


class CorrectionRow(BaseModel):
    p: int
    blocks: List[int]
    stages: List[int]
    cor: int


class CorrectionGoldens(BaseModel):
    n: int
    rows: List[CorrectionRow]


def shorthand_path(golden_dir: Path, p: int, m: int) -> Path:
    return Path(golden_dir) / f"shorthand_p{p}_m{m}.txt"


def _read(path: Path) -> str:
    if not path.exists():
        raise GoldenMissingError(f"Golden file not found: {path}")
    return path.read_text()


def check_goldens(golden_dir: Path) -> Verdict:
    """
    Rebuild the classic generators listed in corrections.yml and compare their
    shorthand tables byte for byte and their corrections value for value.

    Raises:
        GoldenMissingError: a golden file is absent
    """
    goldens = CorrectionGoldens(**yaml.safe_load(_read(Path(golden_dir) / CORRECTIONS_FILE)))
    modulus = (1 << goldens.n) + 1
    details = []
    for row in goldens.rows:
        report = build_classic_fermat(row.p, goldens.n).report
        expected_table = _read(shorthand_path(golden_dir, row.p, modulus))
        table = render_shorthand(report.front_end)
        if table != expected_table:
            details.append(f"p={row.p}: shorthand table differs\n{table}")
        if report.block_corrections != row.blocks:
            details.append(f"p={row.p}: block corrections {report.block_corrections}, expected {row.blocks}")
        if report.stage_corrections != row.stages:
            details.append(f"p={row.p}: stage corrections {report.stage_corrections}, expected {row.stages}")
        if report.cor != row.cor:
            details.append(f"p={row.p}: COR {report.cor}, expected {row.cor}")
    for line in details:
        logger.error(line)
    return Verdict(name=f"goldens mod {modulus}", passed=not details, evaluated=len(goldens.rows), details=details)
