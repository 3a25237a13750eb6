import argparse
import logging

from maps import resolve_family
from models import CoverageReport, FiniteWord, OneSidedWord, SkewState
from transitivity import (
    CSV_HEADER, coverage_csv_rows, load_targets, orbit_coverage, skew_orbit, system_for
)
from utils import csv_text, write_text
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Transitivity"])


def report_exit(report: CoverageReport, out) -> int:
    """Write the coverage CSV; exit 0 iff every target was hit"""
    write_text(out, csv_text(CSV_HEADER, coverage_csv_rows(report)))
    if not report.all_hit:
        logger.warning(f"Hit {report.fraction_hit:.0%} of {len(report.rows)} targets")
        return 2
    return 0


@router.command("orbit", help="Iterate the sorting skew product and report target coverage", arguments=[
    arg("--family", default="definicija"),
    arg("--word", type=int, nargs="*", default=[], help="Leading symbols"),
    arg("--tail", type=int, default=1, help="Symbol repeated after the word"),
    arg("--t", type=float, required=True),
    arg("--steps", type=int, required=True),
    arg("--targets", required=True, help="Targets JSON file"),
    arg("--out", default=None),
])
def cmd_orbit(args: argparse.Namespace) -> int:
    family = resolve_family(args.family)
    symbols = OneSidedWord(prefix=FiniteWord(alphabet=family.alphabet, symbols=tuple(args.word)), tail_symbol=args.tail)
    orbit = skew_orbit(system_for(family), SkewState(symbols=symbols, t=args.t), args.steps)
    targets = load_targets(args.targets, family.alphabet)
    return report_exit(orbit_coverage(orbit, targets), args.out)
