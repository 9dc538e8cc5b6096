"""
Implementations of the command-line subcommands.

Each command returns a process exit code: 0 on success, 1 when a
verification fails. Parameter errors propagate as exceptions and are mapped
to exit code 2 by the dispatcher.
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.common.models import (
    CorrectionLedger,
    CostReport,
    GeneratorFamily,
    GeneratorSpec,
    SweepMode,
    SweepPlan,
    Verdict,
)
from src.common.utils.plan_loader import load_plan_from_file
from src.common.utils.settings import Settings
from src.csa import render_corrections, render_shorthand
from src.export import export_hdl, export_json, import_json
from src.generators import build_generator
from src.verify import run_plan, run_sweep, sharing_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _console() -> Console:
    return Console(file=sys.stdout, highlight=False)


def _emit(text: str, out: Optional[str] = None) -> None:
    """Write text to out, or to stdout when out is None or '-'."""
    if out and out != "-":
        Path(out).write_text(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def cmd_gen(p: int, n: int, family: str, fmt: str = "json", out: Optional[str] = None) -> int:
    """Build a generator and write it as JSON (with its build report) or structural Verilog."""
    spec = GeneratorSpec(p=p, n=n, family=GeneratorFamily(family))
    netlist = build_generator(spec)
    if fmt == "hdl":
        _emit(export_hdl(netlist), out)
    else:
        _emit(export_json(netlist), out)
    return EXIT_OK


def _cost_row(table: Table, label: str, c: CostReport) -> None:
    table.add_row(label, str(c.fa_count), str(c.ha_count), str(c.not_count), str(c.glue_count), str(c.depth))


def _cost_table(title: str) -> Table:
    table = Table(title=title)
    for column in ("", "FA", "HA", "NOT", "glue", "depth"):
        table.add_column(column, justify="left" if not column else "right")
    return table


def cmd_report(p: int, n: int, family: str, as_json: bool = False) -> int:
    """Print the build report of a generator."""
    netlist = build_generator(GeneratorSpec(p=p, n=n, family=GeneratorFamily(family)))
    report = netlist.report
    if as_json:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
        return EXIT_OK

    console = _console()
    summary = Table(title=f"{report.family.value}, p={p}, n={n}", show_header=False)
    summary.add_column("field")
    summary.add_column("value")
    summary.add_row("blocks (q)", str(report.q))
    if report.effective_q is not None:
        summary.add_row("blocks after padding", str(report.effective_q))
        summary.add_row("padded", str(report.padded))
    summary.add_row("COR", str(report.cor))
    if report.block_corrections:
        summary.add_row("block corrections", " ".join(str(c) for c in report.block_corrections))
    if report.stage_corrections:
        summary.add_row("stage corrections", " ".join(str(c) for c in report.stage_corrections))
    if report.core_constant is not None:
        summary.add_row("core constant", f"+{report.core_constant}")
    if report.shared_fa_count is not None:
        summary.add_row("shared front-end FAs", f"{report.shared_fa_count} (p - 4n = {report.expected_shared_fa_count})")
    console.print(summary)

    costs = _cost_table("cost")
    _cost_row(costs, "front-end", report.front_cost)
    _cost_row(costs, "total", report.cost)
    console.print(costs)

    if report.block_corrections or report.stage_corrections:
        ledger = CorrectionLedger(modulus=netlist.modulus)
        for amount in report.block_corrections:
            ledger.charge(amount, "B")
        for amount in report.stage_corrections:
            ledger.charge(amount, "CSA")
        console.print(render_corrections(ledger, p), markup=False)
    return EXIT_OK


def cmd_table(p: int, n: int, family: str) -> int:
    """Print the shorthand table of the p-dependent CSA tree."""
    netlist = build_generator(GeneratorSpec(p=p, n=n, family=GeneratorFamily(family)))
    table = netlist.report.front_end
    sys.stdout.write(render_shorthand(table))
    if not table.stages:
        sys.stdout.write(f"front-end is empty: {table.final_counts} bits per class need no CSA stage\n")
    return EXIT_OK


def cmd_compare(p: int, n: int, as_json: bool = False) -> int:
    """Compare two standalone generators with the bi-residue generator."""
    if p < 4 * n:
        raise ValueError(f"compare needs p >= 4n, got p={p}, n={n}")
    report = sharing_report(p, n)
    if as_json:
        record = report.model_dump(mode="json")
        record["saved_fa_count"] = report.saved_fa_count
        record["saved_ha_count"] = report.saved_ha_count
        sys.stdout.write(json.dumps(record, indent=2) + "\n")
    else:
        costs = _cost_table(f"sharing, p={p}, n={n}")
        _cost_row(costs, "classic mod 2^n-1 + D1 mod 2^n+1", report.standalone)
        _cost_row(costs, "bi-residue", report.shared)
        console = _console()
        console.print(costs)
        console.print(f"saved FAs: {report.saved_fa_count} (p - 4n = {report.expected_saving})")
    if report.saved_fa_count != report.expected_saving:
        logger.error(f"Saving of {report.saved_fa_count} FAs differs from p - 4n = {report.expected_saving}")
        return EXIT_FAILED
    return EXIT_OK


def _print_verdicts(verdicts: List[Verdict], as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps([v.model_dump(mode="json") for v in verdicts], indent=2) + "\n")
        return
    table = Table(title="verification")
    for column in ("check", "result", "evaluated", "counterexample", "port"):
        table.add_column(column)
    for v in verdicts:
        table.add_row(
            v.name,
            "[green]pass[/green]" if v.passed else "[red]FAIL[/red]",
            str(v.evaluated),
            "" if v.counterexample is None else str(v.counterexample),
            v.failing_port or "",
        )
    _console().print(table)


def cmd_verify(p: Optional[int] = None, n: Optional[int] = None, family: Optional[str] = None,
               mode: str = "exhaustive", samples: int = 1_000_000, seed: Optional[int] = None,
               plan: Optional[str] = None, as_json: bool = False,
               settings: Optional[Settings] = None) -> int:
    """Run one sweep, or every check of a plan file."""
    settings = settings or Settings.from_env()
    if plan:
        verdicts = run_plan(load_plan_from_file(plan), settings)
    else:
        if p is None or n is None or family is None:
            raise ValueError("verify needs --plan or all of --family, --p and --n")
        sweep = SweepPlan(
            mode=SweepMode(mode),
            p=p,
            n=n,
            family=GeneratorFamily(family),
            samples=samples,
            seed=seed if seed is not None else settings.seed,
            budget=settings.exhaustive_budget,
        )
        verdicts = [run_sweep(sweep, settings=settings)]
    _print_verdicts(verdicts, as_json)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAILED


def cmd_export(netlist_path: str, out: Optional[str] = None) -> int:
    """Re-import a JSON netlist and write it as structural Verilog."""
    netlist = import_json(Path(netlist_path).read_text())
    _emit(export_hdl(netlist), out)
    return EXIT_OK
