import argparse
import logging

from density import SEARCHES
from maps import resolve_family
from models import LemmaName
from utils import json_text, write_text
from .router import CommandRouter, arg

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Density"])


@router.command("density", help="Search for a density witness", arguments=[
    arg("--lemma", required=True, choices=[lemma.value for lemma in LemmaName]),
    arg("--x", type=float, required=True),
    arg("--z", type=float, required=True),
    arg("--eps", type=float, required=True),
    arg("--bound", type=int, default=None),
    arg("--family", default="definicija", help="Triple for propertyL (catalog name or JSON path)"),
    arg("--out", default=None),
])
def cmd_density(args: argparse.Namespace) -> int:
    """Print the witness as JSON; a miss raises WitnessNotFound (exit 2)"""
    lemma = LemmaName(args.lemma)
    search = SEARCHES[lemma]
    if lemma == LemmaName.property_l:
        witness = search(resolve_family(args.family), args.x, args.z, args.eps, args.bound)
    else:
        witness = search(args.x, args.z, args.eps, args.bound)
    logger.info(f"{lemma.value}: witness {witness.exponents} after {witness.evaluations} evaluations")
    write_text(args.out, json_text({"lemma": lemma.value, **witness.to_json()}))
    return 0
