import argparse
import logging

from errors import UsageError
from mahavier import csv_header, csv_row, resolve_relation, stitch
from transitivity import auto_boxes, build_sigma_chain, load_targets, verify_sigma_chain
from utils import csv_text, write_text
from .orbit import report_exit
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Transitivity"])


@router.command("sigma-chain", help="Chain Mahavier words through cylinder targets on relation H", arguments=[
    arg("--relation", default="H"),
    arg("--targets", default=None, help="Targets JSON file"),
    arg("--auto", type=int, default=None, help="Use this many enumerated dyadic boxes"),
    arg("--bound", type=int, default=None),
    arg("--chain-out", default=None, help="Write the stitched word as CSV"),
    arg("--out", default=None),
])
def cmd_sigma_chain(args: argparse.Namespace) -> int:
    F = resolve_relation(args.relation)
    if (args.targets is None) == (args.auto is None):
        raise UsageError("give exactly one of --targets and --auto")
    targets = auto_boxes(F, args.auto) if args.auto is not None else load_targets(args.targets, F.alphabet)

    chain = build_sigma_chain(F, targets, args.bound)
    if args.chain_out:
        stitched = stitch(chain.points, chain.lengths)
        write_text(args.chain_out, csv_text(csv_header(len(stitched.values)), [csv_row(stitched)]))
    return report_exit(verify_sigma_chain(chain, targets), args.out)
