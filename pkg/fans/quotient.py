import logging
from typing import Optional, Tuple, Union

import numpy as np

from config import settings
from errors import NotCompatible, OutOfRange
from mahavier import exx2_apex_fiber
from models import (
    Alphabet, Apex, FanPoint, FiniteWord, Leg, OneSidedWord, SkewState, SkewSystem,
    TwoSidedMahavierWindow, TwoSidedSymbolWindow, WindowLeg
)
from symbolic import concat, shift_one_sided
from transitivity import skew_step

logger = logging.getLogger(__name__)

Symbols = Union[TwoSidedSymbolWindow, Tuple[OneSidedWord, OneSidedWord]]

PROBE_RADIUS = 4


def canonicalize(symbols: Symbols, t: float) -> FanPoint:
    """Representative of [(symbols, t)]: the t = 1 fiber is the apex"""
    if not 0 <= t <= 1:
        raise OutOfRange(f"t must lie in [0, 1], got {t}")
    if t == 1:
        return Apex()
    return Leg(symbols=symbols, t=t)


def canonicalize_exx2(window: TwoSidedMahavierWindow, tol: Optional[float] = None) -> FanPoint:
    """Windows with every coordinate in {0, 2} collapse to the apex"""
    if exx2_apex_fiber(window, tol):
        return Apex()
    return WindowLeg(window=window)


def canonicalize_lelek(window: TwoSidedMahavierWindow, tol: Optional[float] = None) -> FanPoint:
    """The all-zero window of I_H is the apex"""
    tol = settings.identity_tolerance if tol is None else tol
    if all(abs(v) <= tol for v in window.values):
        return Apex()
    return WindowLeg(window=window)


def _pair_step(sys: SkewSystem, a: OneSidedWord, b: OneSidedWord, t: float) -> Tuple[OneSidedWord, OneSidedWord, float]:
    """((a, b), t) -> ((shift(a), a(1) b), f_{a(1)}(t))"""
    head = FiniteWord(alphabet=a.alphabet, symbols=(a.at(1),))
    return shift_one_sided(a), concat(head, b), sys.family.map(a.at(1)).value(t)


def _step(sys: SkewSystem, symbols: Symbols, t: float) -> Tuple[Symbols, float]:
    if isinstance(symbols, TwoSidedSymbolWindow):
        s = skew_step(sys, SkewState(symbols=symbols, t=t))
        return s.symbols, s.t
    a, b, t = _pair_step(sys, symbols[0], symbols[1], t)
    return (a, b), t


def _random_symbols(alphabet: Alphabet, rng: np.random.Generator, pair: bool) -> Symbols:
    def draw(n: int) -> Tuple[int, ...]:
        return tuple(int(s) for s in rng.integers(1, alphabet.size + 1, size=n))

    if pair:
        return (
            OneSidedWord(prefix=FiniteWord(alphabet=alphabet, symbols=draw(PROBE_RADIUS)), tail_symbol=int(draw(1)[0])),
            OneSidedWord(prefix=FiniteWord(alphabet=alphabet, symbols=draw(PROBE_RADIUS)), tail_symbol=int(draw(1)[0]))
        )
    return TwoSidedSymbolWindow(alphabet=alphabet, lo=1 - PROBE_RADIUS, hi=PROBE_RADIUS, symbols=draw(2 * PROBE_RADIUS))


def apex_representatives(alphabet: Alphabet, probes: int = 10, seed: Optional[int] = None, pair: bool = False):
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    return [_random_symbols(alphabet, rng, pair) for _ in range(probes)]


def check_compatible(sys: SkewSystem, probes: int = 10, seed: Optional[int] = None):
    """The base map must send the t = 1 fiber into itself on every probe"""
    for pair in (False, True):
        for symbols in apex_representatives(sys.family.alphabet, probes, seed, pair):
            _, t = _step(sys, symbols, 1.0)
            if abs(t - 1.0) > settings.identity_tolerance:
                raise NotCompatible(f"{sys.family.name or 'family'} moves the apex fiber to t = {t}")


def induced_map(sys: SkewSystem, p: FanPoint, probes: int = 10, seed: Optional[int] = None) -> FanPoint:
    """f*([x]) = [f(x)] for the skew product of sys"""
    check_compatible(sys, probes, seed)
    if isinstance(p, Apex):
        return p
    if not isinstance(p, Leg):
        raise NotCompatible("window legs carry no skew representative")
    symbols, t = _step(sys, p.symbols, p.t)
    return canonicalize(symbols, min(t, 1.0))
