import argparse
import logging

from mahavier import (
    csv_header, csv_row, enumerate_mahavier, forward_impression_sample, impression_coverage, resolve_relation
)
from utils import csv_text, json_text, write_text
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Mahavier"])


@router.command("mahavier", help="Enumerate the truncated Mahavier product from a start value", arguments=[
    arg("--relation", default="H", help="Catalog name or JSON path"),
    arg("--start", type=float, required=True),
    arg("--depth", type=int, required=True),
    arg("--budget", type=int, default=None),
    arg("--out", default=None),
])
def cmd_mahavier(args: argparse.Namespace) -> int:
    F = resolve_relation(args.relation)
    words = enumerate_mahavier(F, args.start, args.depth, args.budget)
    logger.info(f"{len(words)} words of length {args.depth + 1}")
    write_text(args.out, csv_text(csv_header(args.depth + 1), [csv_row(w) for w in words]))
    return 0


@router.command("impression", help="Sample the forward impression of a point and measure its coverage", arguments=[
    arg("--relation", default="exx1"),
    arg("--start", type=float, required=True),
    arg("--depth", type=int, default=30),
    arg("--budget", type=int, default=10_000),
    arg("--radius", type=float, default=0.01),
    arg("--lo", type=float, default=0.0),
    arg("--hi", type=float, default=1.0),
    arg("--out", default=None),
])
def cmd_impression(args: argparse.Namespace) -> int:
    F = resolve_relation(args.relation)
    samples = forward_impression_sample(F, args.start, args.depth, args.budget, args.seed)
    coverage = impression_coverage(samples, args.lo, args.hi, args.radius)
    write_text(args.out, json_text({"samples": len(samples), "coverage": coverage, "radius": args.radius}))
    return 0
