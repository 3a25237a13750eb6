import logging
from typing import List, Optional, Tuple

from errors import OutOfDomain, OutOfImage, OutOfRange, WindowTooShort
from maps import invert, inverse_word_compose
from models import (
    FiniteWord, MapFamily, OneSidedWord, ShiftSide, SkewState, SkewSystem, TwoSidedSymbolWindow
)
from symbolic import concat, shift_one_sided, shift_two_sided

logger = logging.getLogger(__name__)


def _check_t(sys: SkewSystem, t: float):
    if not sys.family.domain.contains(t):
        raise OutOfDomain(f"{t} is outside the family domain")


def skew_step(sys: SkewSystem, s: SkewState) -> SkewState:
    """(x, t) -> (shift(x), f_{x(1)}(t))"""
    _check_t(sys, s.t)
    symbol = s.symbols.at(1)
    if isinstance(s.symbols, OneSidedWord):
        shifted = shift_one_sided(s.symbols)
    else:
        shifted = shift_two_sided(s.symbols, "forward")
    return SkewState(symbols=shifted, t=sys.family.map(symbol).value(s.t))


def skew_inverse_step(sys: SkewSystem, s: SkewState) -> SkewState:
    """(x, t) -> (shift^-1(x), f^-1_{x(0)}(t)) on two-sided windows"""
    if not isinstance(s.symbols, TwoSidedSymbolWindow):
        raise OutOfRange("the one-sided sorting map has no inverse; use skew_preimage")
    _check_t(sys, s.t)
    symbol = s.symbols.at(0)
    return SkewState(symbols=shift_two_sided(s.symbols, "backward"), t=invert(sys.family.map(symbol), s.t))


def skew_preimage(sys: SkewSystem, s: SkewState, symbol: Optional[int] = None) -> SkewState:
    """A one-sided state mapped onto s: prepend a symbol and pull t back through its map"""
    if not isinstance(s.symbols, OneSidedWord):
        raise OutOfRange("preimages are built for one-sided states")
    candidates = [symbol] if symbol is not None else list(range(1, len(sys.family.maps) + 1))
    for k in candidates:
        try:
            t = invert(sys.family.map(k), s.t)
        except OutOfImage:
            continue
        prefix = FiniteWord(alphabet=s.symbols.alphabet, symbols=(k,))
        return SkewState(symbols=concat(prefix, s.symbols), t=t)
    raise OutOfImage(f"{s.t} is outside the image of every admissible map")


def skew_orbit(sys: SkewSystem, s0: SkewState, steps: int) -> List[SkewState]:
    if steps < 0:
        raise OutOfRange(f"steps must be non-negative, got {steps}")
    if isinstance(s0.symbols, TwoSidedSymbolWindow) and s0.symbols.hi < steps + 1:
        raise WindowTooShort(f"window ending at {s0.symbols.hi} cannot supply {steps} steps")
    orbit = [s0]
    for _ in range(steps):
        orbit.append(skew_step(sys, orbit[-1]))
    return orbit


def system_for(family: MapFamily, side: ShiftSide = ShiftSide.one_sided) -> SkewSystem:
    return SkewSystem(family=family, side=side)


# Inverse limit of the one-sided sorting map

InverseLimitPoint = List[SkewState]


def inverse_limit_point(family: MapFamily, a: OneSidedWord, b: FiniteWord, t: float) -> InverseLimitPoint:
    """Coordinates ((a, t), (b[1]+a, f^-1_{b[1]}(t)), ..., (b[N]+a, f^-1_{b[N]}(t))), b[i] = (b(i), ..., b(1))"""
    coords = [SkewState(symbols=a, t=t)]
    for i in range(1, len(b) + 1):
        head = FiniteWord(alphabet=a.alphabet, symbols=tuple(reversed(b.symbols[:i])))
        t_i = inverse_word_compose(family, FiniteWord(alphabet=a.alphabet, symbols=b.symbols[:i]), t)
        coords.append(SkewState(symbols=concat(head, a), t=t_i))
    return coords


def inverse_limit_readback(coords: InverseLimitPoint) -> Tuple[OneSidedWord, FiniteWord, float]:
    """Recover (a, b, t); b(i) is the leading symbol of coordinate i"""
    a = coords[0].symbols
    b = tuple(c.symbols.at(1) for c in coords[1:])
    return a, FiniteWord(alphabet=a.alphabet, symbols=b), coords[0].t


def inverse_limit_shift(coords: InverseLimitPoint) -> InverseLimitPoint:
    """Drop the leading coordinate"""
    if len(coords) < 2:
        raise WindowTooShort("an inverse-limit truncation needs two coordinates to shift")
    return coords[1:]


def inverse_limit_unshift(family: MapFamily, coords: InverseLimitPoint) -> InverseLimitPoint:
    """Prepend the sorting-map image of the leading coordinate"""
    sys = SkewSystem(family=family)
    return [skew_step(sys, coords[0])] + list(coords)


def product_shift(family: MapFamily, a: OneSidedWord, b: FiniteWord, t: float) -> Tuple[OneSidedWord, FiniteWord, float]:
    """((a, b), t) -> ((b(1)+a, shift(b)), f^-1_{b(1)}(t)) on (C_n x C_n) x X"""
    if not len(b):
        raise WindowTooShort("b has no leading symbol")
    head = FiniteWord(alphabet=a.alphabet, symbols=b.symbols[:1])
    return concat(head, a), FiniteWord(alphabet=b.alphabet, symbols=b.symbols[1:]), invert(family.map(b.at(1)), t)


def product_unshift(family: MapFamily, a: OneSidedWord, b: FiniteWord, t: float) -> Tuple[OneSidedWord, FiniteWord, float]:
    """((a, b), t) -> ((shift(a), a(1)+b), f_{a(1)}(t))"""
    symbol = a.at(1)
    return shift_one_sided(a), FiniteWord(alphabet=b.alphabet, symbols=(symbol,) + b.symbols), family.map(symbol).value(t)


def conjugate_sorting_step(family: MapFamily, s: SkewState) -> SkewState:
    """
    The two-sided sorting step assembled from the split S, the inverse-limit
    coordinates T and the inverse-limit shift: S o T o shift^-1 o T^-1 o S^-1.
    """
    window = s.symbols
    if not isinstance(window, TwoSidedSymbolWindow):
        raise OutOfRange("the conjugacy acts on two-sided windows")
    if window.hi < 2:
        raise WindowTooShort(f"forward step of window [{window.lo}, {window.hi}] leaves no index 1")
    alphabet = window.alphabet
    # S^-1
    a = OneSidedWord(prefix=FiniteWord(alphabet=alphabet, symbols=tuple(window.at(k) for k in range(1, window.hi + 1))))
    b = FiniteWord(alphabet=alphabet, symbols=tuple(window.at(k) for k in range(0, window.lo - 1, -1)))
    # T^-1, then shift^-1, then T
    coords = inverse_limit_unshift(family, inverse_limit_point(family, a, b, s.t))
    a2, b2, t2 = inverse_limit_readback(coords)
    # S on the overlap window [lo - 1, hi - 1]
    hi = window.hi - 1
    symbols = tuple(reversed(b2.symbols)) + a2.take(hi)
    return SkewState(
        symbols=TwoSidedSymbolWindow(alphabet=alphabet, lo=1 - len(b2), hi=hi, symbols=symbols),
        t=t2
    )
