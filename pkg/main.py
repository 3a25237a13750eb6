import argparse
import json
import logging
import sys
from typing import List, Optional

from config import settings
from errors import FanlabError, UsageError
from commands import (
    density_router, mahavier_router, orbit_router,
    transitive_point_router, sigma_chain_router,
    render_router, verify_router
)

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class FanlabArgumentParser(argparse.ArgumentParser):
    """Usage errors go through the same handler as every other failure"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=settings.seed)
    parent.add_argument("--threads", type=int, default=None, help="Overrides FANLAB_THREADS")
    parent.add_argument("--log-level", type=str.upper, default=settings.log_level.upper(), choices=LOG_LEVELS)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = FanlabArgumentParser(
        prog=settings.app_name,
        description="Experiments with sorting skew products, Mahavier products and fans"
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=FanlabArgumentParser)
    parents = [common_options()]

    # Include routers
    density_router.include(subparsers, parents)
    mahavier_router.include(subparsers, parents)
    orbit_router.include(subparsers, parents)
    transitive_point_router.include(subparsers, parents)
    sigma_chain_router.include(subparsers, parents)
    render_router.include(subparsers, parents)
    verify_router.include(subparsers, parents)
    return parser


def error_exit(exc: FanlabError) -> int:
    sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
    return exc.exit_code


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except FanlabError as e:
        return error_exit(e)

    logging.basicConfig(level=args.log_level, stream=sys.stderr)
    if args.threads is not None:
        settings.threads = args.threads

    try:
        return args.handler(args)
    except FanlabError as e:
        return error_exit(e)
    except OSError as e:
        logger.error(f"I/O error: {str(e)}")
        return 4
    except Exception as e:
        logger.error(f"Unhandled exception: {str(e)}")
        return 1


if __name__ == "__main__":
    sys.exit(run())
