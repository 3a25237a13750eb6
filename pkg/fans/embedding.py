"""Planar pictures of the fans and of relation graphs"""

from collections import OrderedDict
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from density import F0
from errors import OutOfRange
from models import ClosedRelation, LelekWindowPoint
from utils import Point, svg_document, svg_polyline, ordered_map

FAN_VIEWBOX = (0.0, -1.0, 1.0, 1.0)


def cantor_points(depth: int) -> List[float]:
    """Depth-d ternary Cantor approximants sum 2 d_i / 3^i, ascending"""
    if depth < 1:
        raise OutOfRange(f"depth must be positive, got {depth}")
    return [
        float(sum(Fraction(2 * d, 3 ** i) for i, d in enumerate(digits, start=1)))
        for digits in product((0, 1), repeat=depth)
    ]


def embed_cantor_fan(depth: int, samples: int) -> List[List[Point]]:
    """One leg per approximant c, sampled at (t c, -t)"""
    if samples < 1:
        raise OutOfRange(f"samples must be positive, got {samples}")
    ts = np.linspace(0.0, 1.0, samples)
    return [[(float(t * c), float(-t)) for t in ts] for c in cantor_points(depth)]


def choice_code(choices: Sequence[int]) -> float:
    """Ternary digit 0 for f0, 2 for f1"""
    return float(sum(Fraction(0 if s == F0 else 2, 3 ** i) for i, s in enumerate(choices, start=1)))


def forward_choices(x: LelekWindowPoint) -> Tuple[int, ...]:
    """Choices at indices 0..hi-1, the part no backward clipping touches"""
    return tuple(x.window.choice_at(k) for k in range(0, x.window.hi))


def _lelek_point(x: LelekWindowPoint) -> Point:
    t = x.window.value_at(1)
    return t * choice_code(forward_choices(x)), -t


def embed_lelek(windows: Sequence[LelekWindowPoint]) -> List[Point]:
    if not windows:
        raise OutOfRange("no windows to embed")
    return ordered_map(_lelek_point, windows)


def lelek_legs(windows: Sequence[LelekWindowPoint]) -> Dict[Tuple[int, ...], List[Point]]:
    """Embedded points grouped by forward choice word, each leg ordered by t"""
    legs: Dict[Tuple[int, ...], List[Point]] = OrderedDict()
    for x, point in zip(windows, embed_lelek(windows)):
        legs.setdefault(forward_choices(x), []).append(point)
    return OrderedDict((key, sorted(points, key=lambda p: -p[1])) for key, points in sorted(legs.items()))


def render_cantor(depth: int, samples: int = 2) -> str:
    legs = embed_cantor_fan(depth, samples)
    return svg_document([svg_polyline(leg) for leg in legs], FAN_VIEWBOX)


def render_lelek(windows: Sequence[LelekWindowPoint]) -> str:
    legs = lelek_legs(windows)
    elements = [svg_polyline([(0.0, 0.0)] + points) for points in legs.values()]
    return svg_document(elements, FAN_VIEWBOX)


def relation_graphs(F: ClosedRelation, samples: int = 201) -> List[List[Point]]:
    """Graph of every branch piece as (t, -f(t)) so that larger values sit higher"""
    graphs = []
    for f in F.branches.maps:
        for piece in f.pieces:
            a, b = piece.interval
            graphs.append([(float(t), -piece.expr.value(float(t))) for t in np.linspace(a, b, samples)])
    return graphs


def render_relation(F: ClosedRelation, samples: int = 201) -> str:
    lower, upper = F.domain.lower, F.domain.upper
    width = upper - lower
    elements = [svg_polyline(graph, stroke_width=width / 300) for graph in relation_graphs(F, samples)]
    return svg_document(elements, (lower, -upper, width, width))


def cantor_csv_rows(depth: int, samples: int) -> List[List[str]]:
    ts = np.linspace(0.0, 1.0, samples)
    rows = []
    for leg_id, leg in enumerate(embed_cantor_fan(depth, samples)):
        for t, (x, y) in zip(ts, leg):
            rows.append([str(leg_id), repr(float(t)), repr(x), repr(y)])
    return rows


def lelek_csv_rows(windows: Sequence[LelekWindowPoint]) -> List[List[str]]:
    rows = []
    for leg_id, points in enumerate(lelek_legs(windows).values()):
        for x, y in points:
            rows.append([str(leg_id), repr(-y), repr(x), repr(y)])
    return rows


CSV_HEADER = ["leg_id", "t", "x", "y"]
