import argparse
import logging

import numpy as np

from fans import (
    CSV_HEADER, cantor_csv_rows, lelek_csv_rows, render_cantor, render_lelek, render_relation, sample_lelek_legs
)
from mahavier import resolve_relation
from models import RenderKind
from utils import csv_text, write_text
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Fans"])


@router.command("render", help="Draw the Cantor fan, the Lelek fan or a relation as SVG", arguments=[
    arg("--kind", required=True, choices=[kind.value for kind in RenderKind]),
    arg("--depth", type=int, default=6, help="Cantor depth"),
    arg("--samples", type=int, default=2, help="Points per leg"),
    arg("--name", default="exx3", help="Relation to draw (catalog name or JSON path)"),
    arg("--legs", type=int, default=64, help="Lelek legs"),
    arg("--lo", type=int, default=-8),
    arg("--hi", type=int, default=8),
    arg("--csv", default=None, help="Also dump leg points as CSV"),
    arg("--out", default=None),
])
def cmd_render(args: argparse.Namespace) -> int:
    kind = RenderKind(args.kind)
    if kind == RenderKind.cantor:
        svg = render_cantor(args.depth, args.samples)
        rows = cantor_csv_rows(args.depth, args.samples)
    elif kind == RenderKind.lelek:
        rng = np.random.default_rng(args.seed)
        windows = sample_lelek_legs(rng, args.legs, max(args.samples, 2), args.lo, args.hi)
        svg = render_lelek(windows)
        rows = lelek_csv_rows(windows)
    else:
        svg = render_relation(resolve_relation(args.name))
        rows = None
    write_text(args.out, svg)
    if args.csv and rows is not None:
        write_text(args.csv, csv_text(CSV_HEADER, rows))
    logger.info(f"Rendered {kind.value}")
    return 0
