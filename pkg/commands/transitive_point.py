import argparse
import logging

from errors import UsageError
from maps import resolve_family
from transitivity import (
    build_transitive_point, first_targets, load_targets, targets_from_cylinders, verify_transitive_point
)
from utils import json_text, write_text
from .orbit import report_exit
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Transitivity"])


@router.command("transitive-point", help="Build a prefix whose skew orbit visits every target", arguments=[
    arg("--family", default="definicija"),
    arg("--targets", default=None, help="Targets JSON file"),
    arg("--auto", type=int, default=None, help="Use this many enumerated (word, dyadic) targets"),
    arg("--eps-floor", type=float, default=0.0, help="Lower bound on the automatic 2^-i tolerances"),
    arg("--x0", type=float, default=0.5),
    arg("--bound", type=int, default=None),
    arg("--prefix-out", default=None, help="Write the prefix and hit times as JSON"),
    arg("--out", default=None),
])
def cmd_transitive_point(args: argparse.Namespace) -> int:
    family = resolve_family(args.family)
    if (args.targets is None) == (args.auto is None):
        raise UsageError("give exactly one of --targets and --auto")
    if args.auto is not None:
        targets, schedule = first_targets(family.alphabet, args.auto, args.eps_floor)
    else:
        targets, schedule = targets_from_cylinders(load_targets(args.targets, family.alphabet))

    point = build_transitive_point(family, targets, schedule, args.x0, args.bound)
    logger.info(f"Prefix of length {len(point.word.prefix)} with hit times {list(point.hit_times)}")
    if args.prefix_out:
        write_text(args.prefix_out, json_text({
            "x0": point.x0,
            "prefix": list(point.word.prefix.symbols),
            "tail": point.word.tail_symbol,
            "hit_times": list(point.hit_times),
            "eps": list(point.eps_schedule),
        }))
    return report_exit(verify_transitive_point(family, point), args.out)
