"""
Render the fan figures into a directory
"""
import argparse
import os
import sys

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from config import settings
from fans import render_cantor, render_lelek, render_relation, sample_lelek_legs
from mahavier import relation_catalog
from utils import write_text


def render_all(out_dir: str, seed: int):
    """Cantor fan, Lelek fan, and the branch graphs of every catalog relation used in figures"""
    os.makedirs(out_dir, exist_ok=True)
    figures = {
        "cantor_fan.svg": render_cantor(6),
        "lelek_fan.svg": render_lelek(sample_lelek_legs(np.random.default_rng(seed), 64, 9, -8, 8)),
    }
    for name in ("exx1", "exx2", "exx3", "H"):
        figures[f"relation_{name}.svg"] = render_relation(relation_catalog(name))

    for filename, svg in figures.items():
        path = os.path.join(out_dir, filename)
        write_text(path, svg)
        print(f"Wrote {path}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", default="figures")
    parser.add_argument("--seed", type=int, default=settings.seed)
    args = parser.parse_args()
    render_all(args.out_dir, args.seed)


if __name__ == "__main__":
    main()
