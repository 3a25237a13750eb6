import logging
import math
from itertools import groupby
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import NotInvertible, OutOfDomain, OutOfImage, OutOfRange
from models import FiniteWord, MapFamily, Piece, PiecewiseMap
from models.map_models import BOUNDARY_TOL

logger = logging.getLogger(__name__)

Run = Tuple[int, int]


def eval_map(m: PiecewiseMap, t: float) -> float:
    """Value of the covering piece at t"""
    return m.value(t)


def injective(m: PiecewiseMap, tol: float = BOUNDARY_TOL) -> bool:
    """Pieces are strictly monotone; injective iff their images only touch at shared breakpoints"""
    images = [piece.image() for piece in m.pieces]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            overlap = min(images[i][1], images[j][1]) - max(images[i][0], images[j][0])
            if overlap > tol:
                return False
            if overlap >= -tol:
                left, right = m.pieces[i], m.pieces[j]
                adjacent = j == i + 1 and left.interval[1] == right.interval[0]
                if not adjacent or _direction(left) != _direction(right):
                    return False
    return True


def _direction(piece: Piece) -> int:
    a, b = piece.interval
    return 1 if piece.expr.value(b) >= piece.expr.value(a) else -1


def invert(m: PiecewiseMap, t: float) -> float:
    if not (m.invertible or injective(m)):
        raise NotInvertible(f"{m.name or 'map'} is not injective")
    for piece in m.pieces:
        lo, hi = piece.image()
        if lo - BOUNDARY_TOL <= t <= hi + BOUNDARY_TOL:
            a, b = piece.interval
            return min(max(piece.expr.inverse(min(max(t, lo), hi)), a), b)
    raise OutOfImage(f"{t} is outside the image of {m.name or 'map'}")


def compose_word(fam: MapFamily, word: FiniteWord, t: float) -> float:
    """f_{word(len)} o ... o f_{word(1)} applied to t, leftmost letter first"""
    if not word.symbols:
        raise OutOfRange("cannot compose an empty word")
    for symbol in word.symbols:
        t = fam.map(symbol).value(t)
    return t


def inverse_word_compose(fam: MapFamily, w: FiniteWord, t: float) -> float:
    """f_{w(m)}^-1 o ... o f_{w(1)}^-1 applied to t"""
    if not fam.domain.contains(t):
        raise OutOfDomain(f"{t} is outside the family domain")
    for symbol in w.symbols:
        t = invert(fam.map(symbol), t)
    return t


# Log-space path

def _log_bound(x: float) -> float:
    return math.log(x) if x > 0 else -math.inf


def _piece_for_log(m: PiecewiseMap, log_t: float, tol: float = BOUNDARY_TOL) -> Piece:
    for piece in m.pieces:
        a, b = piece.interval
        if b <= 0:
            continue
        if _log_bound(a) - tol <= log_t <= _log_bound(b) + tol:
            return piece
    raise OutOfDomain(f"e^{log_t} is outside the positive part of {m.name or 'map'}")


def log_eval(m: PiecewiseMap, log_t: float) -> float:
    """ln m(e^log_t) without leaving log space"""
    piece = _piece_for_log(m, log_t)
    value = piece.expr.log_value(log_t)
    if value is None:
        raise OutOfDomain(f"{m.name or 'map'} has no log form at e^{log_t}")
    return value


def iterate_log(m: PiecewiseMap, log_t: float, times: int) -> float:
    """ln m^times(e^log_t); runs inside a contracting linear piece [0, b] are jumped in one step"""
    while times > 0:
        piece = _piece_for_log(m, log_t)
        expr = piece.expr
        if expr.is_linear and expr.log_slope < 0 and piece.interval[0] == 0:
            return log_t + times * expr.log_slope
        log_t = log_eval(m, log_t)
        times -= 1
    return log_t


def compose_runs_log(fam: MapFamily, runs: Iterable[Run], log_t: float) -> float:
    for symbol, count in runs:
        log_t = iterate_log(fam.map(symbol), log_t, count)
    return log_t


def compose_word_log(fam: MapFamily, symbols: Sequence[int], log_t: float) -> float:
    return compose_runs_log(fam, run_lengths(symbols), log_t)


def run_lengths(symbols: Sequence[int]) -> List[Run]:
    return [(symbol, sum(1 for _ in group)) for symbol, group in groupby(symbols)]


def safe_log(t: float) -> float:
    return math.log(t) if t > 0 else -math.inf


def safe_exp(log_t: Optional[float]) -> float:
    if log_t is None or log_t == -math.inf:
        return 0.0
    return math.exp(log_t)
