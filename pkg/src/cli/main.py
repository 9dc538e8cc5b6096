"""
Argument parsing and dispatch
"""

import argparse
import logging
from typing import List, Optional

from pydantic import ValidationError

from src.common.errors import ResidueGenError
from src.common.models import GeneratorFamily, SweepMode
from src.common.utils.log_config import configure_logging

from .commands import EXIT_FAILED, EXIT_USAGE, cmd_compare, cmd_export, cmd_gen, cmd_report, cmd_table, cmd_verify

logger = logging.getLogger(__name__)

FAMILIES = [family.value for family in GeneratorFamily]


def _add_generator_args(parser: argparse.ArgumentParser, with_family: bool = True) -> None:
    if with_family:
        parser.add_argument('--family', '-f', choices=FAMILIES, required=True, help='Generator family')
    parser.add_argument('--p', type=int, required=True, help='Input width in bits')
    parser.add_argument('--n', type=int, required=True, help='Modulus parameter n (moduli 2^n-1, 2^n+1)')


def build_parser() -> argparse.ArgumentParser:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description='Residue generators mod 2^n-1 and 2^n+1')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')
    parser.add_argument('--no-color', action='store_true', help='Disable colorized logging output')
    parser.add_argument('--log-file', type=str, help='Path to write logs to a file')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='Build a generator netlist')
    _add_generator_args(gen)
    gen.add_argument('--format', choices=['json', 'hdl'], default='json', help='Output format (default: json)')
    gen.add_argument('--out', '-o', type=str, help='Output file (default: stdout)')

    verify = sub.add_parser('verify', help='Sweep a generator against the oracle, or run a plan')
    verify.add_argument('--plan', type=str, help='YAML verification plan')
    verify.add_argument('--family', '-f', choices=FAMILIES, help='Generator family')
    verify.add_argument('--p', type=int, help='Input width in bits')
    verify.add_argument('--n', type=int, help='Modulus parameter n')
    verify.add_argument('--mode', choices=[m.value for m in SweepMode], default='exhaustive',
                        help='Sweep mode (default: exhaustive)')
    verify.add_argument('--samples', type=int, default=1_000_000, help='Random samples (default: 1000000)')
    verify.add_argument('--seed', type=int, help='Random seed (default: RESGEN_SEED or 42)')
    verify.add_argument('--json', action='store_true', help='Print verdicts as JSON')

    report = sub.add_parser('report', help='Print the build report and cost of a generator')
    _add_generator_args(report)
    report.add_argument('--json', action='store_true', help='Print the report as JSON')

    table = sub.add_parser('table', help='Print the shorthand table of the CSA tree')
    _add_generator_args(table)

    compare = sub.add_parser('compare', help='Cost of two standalone generators vs the bi-residue generator')
    _add_generator_args(compare, with_family=False)
    compare.add_argument('--json', action='store_true', help='Print the comparison as JSON')

    export = sub.add_parser('export', help='Convert a JSON netlist to structural Verilog')
    export.add_argument('netlist', help='JSON netlist written by gen')
    export.add_argument('--out', '-o', type=str, help='Output file (default: stdout)')
    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == 'gen':
        return cmd_gen(args.p, args.n, args.family, args.format, args.out)
    if args.command == 'verify':
        return cmd_verify(args.p, args.n, args.family, args.mode, args.samples, args.seed, args.plan, args.json)
    if args.command == 'report':
        return cmd_report(args.p, args.n, args.family, args.json)
    if args.command == 'table':
        return cmd_table(args.p, args.n, args.family)
    if args.command == 'compare':
        return cmd_compare(args.p, args.n, args.json)
    return cmd_export(args.netlist, args.out)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(
        level=logging.DEBUG if args.verbose else logging.INFO,
        log_file=args.log_file,
        use_rich=not args.no_color,
    )
    try:
        return dispatch(args)
    except (ResidueGenError, ValidationError, ValueError) as e:
        logger.error(f"Invalid parameters: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_FAILED
