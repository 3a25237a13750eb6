import argparse
import logging

from checks import SUITES, TABLE_HEADER, run_suite
from utils import csv_text, write_text
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Verification"])


@router.command("verify", help="Run the acceptance suites and print a pass/fail table", arguments=[
    arg("--suite", default="all", choices=["all", *SUITES]),
    arg("--out", default=None),
])
def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.seed)
    write_text(args.out, csv_text(TABLE_HEADER, [result.row() for result in results]))
    failed = [result.name for result in results if not result.passed]
    if failed:
        logger.warning(f"Failed checks: {', '.join(failed)}")
        return 2
    logger.info(f"All {len(results)} checks passed")
    return 0
