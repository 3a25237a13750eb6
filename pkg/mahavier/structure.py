import logging
from collections import Counter
from typing import List, Optional, Tuple

from config import settings
from errors import AlphabetMismatch, NotApplicable, SeamViolation, UsageError, WindowTooShort
from models import (
    ClosedRelation, Direction, FiniteWord, MahavierWord, OneSidedWord,
    TwoSidedMahavierWindow, TwoSidedSymbolWindow,
)
from .relations import fixed_by_all, interleave_hypothesis

logger = logging.getLogger(__name__)

# ties broken by the lowest branch index away from common fixed points
t_map_diagnostics: Counter = Counter()


def interleave_order(lo: int, hi: int) -> List[int]:
    """Choice indices 0, -1, 1, -2, 2, ... up to the first one outside [lo, hi - 1]"""
    order = []
    j = 0
    while True:
        k = j // 2 if j % 2 == 0 else -(j + 1) // 2
        if not lo <= k <= hi - 1:
            return order
        order.append(k)
        j += 1


def _select_branch(F: ClosedRelation, x: float, y: float) -> int:
    matches = [k for k in range(1, F.size + 1) if F.step_ok(k, x, y)]
    if not matches:
        raise ValueError(f"no branch maps {x} to {y}")
    if len(matches) > 1 and not fixed_by_all(F, x):
        t_map_diagnostics["roundoff_ties"] += 1
    return matches[0]


def interleave_T(w: TwoSidedMahavierWindow, F: Optional[ClosedRelation] = None,
                 length: Optional[int] = None) -> MahavierWord:
    """
    Fold a two-sided window into a forward word.

    Choices are read in the order m(0), m(-1), m(1), m(-2), ... and applied one after
    another starting from x(0); a window [lo, hi] supplies hi + |lo| values.
    """
    F = w.relation if F is None else F
    if not interleave_hypothesis(F).holds:
        raise NotApplicable(f"{F.name or 'relation'} does not have homeomorphic branches agreeing only at common fixed points")
    order = interleave_order(w.lo, w.hi)
    if length is not None:
        if length > len(order):
            raise WindowTooShort(f"window [{w.lo}, {w.hi}] supplies {len(order)} values, {length} requested")
        order = order[:length]

    x0 = w.value_at(0)
    if all(abs(v - x0) <= settings.identity_tolerance for v in w.values) and fixed_by_all(F, x0):
        return MahavierWord(relation=F, values=(x0,) * len(order), choices=(1,) * (len(order) - 1))

    branches = [_select_branch(F, w.value_at(k), w.value_at(k + 1)) for k in order]
    values = [F.branches.map(branches[0]).value(x0)]
    for k in branches[1:]:
        values.append(F.branches.map(k).value(values[-1]))
    return MahavierWord(relation=F, values=tuple(values), choices=tuple(branches[1:]))


def phi_pair_to_window(a: MahavierWord, b: MahavierWord) -> TwoSidedMahavierWindow:
    """Glue b reversed (indices <= 0) to a (indices >= 1) through the lowest seam branch"""
    if a.direction != Direction.forward or b.direction != Direction.backward:
        raise UsageError("phi expects a forward word and a backward word")
    if a.relation != b.relation:
        raise UsageError("words belong to different relations")
    F = a.relation
    seam = next((k for k in range(1, F.size + 1) if F.step_ok(k, b.values[0], a.values[0])), None)
    if seam is None:
        raise SeamViolation(f"({b.values[0]}, {a.values[0]}) is not in {F.name or 'the relation'}")
    return TwoSidedMahavierWindow(
        relation=F,
        lo=1 - len(b.values),
        hi=len(a.values),
        values=tuple(reversed(b.values)) + a.values,
        choices=tuple(reversed(b.choices)) + (seam,) + a.choices
    )


def conjugacy_S(a: OneSidedWord, b: OneSidedWord, t: float,
                radius: Optional[int] = None) -> Tuple[TwoSidedSymbolWindow, float]:
    """(a, b) -> (..., b(2), b(1); a(1), a(2), ...) on the window [1 - radius, radius]"""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"alphabets of size {a.alphabet.size} and {b.alphabet.size}")
    if radius is None:
        radius = max(len(a.prefix), len(b.prefix)) + 1
    symbols = tuple(reversed(b.take(radius))) + a.take(radius)
    return TwoSidedSymbolWindow(alphabet=a.alphabet, lo=1 - radius, hi=radius, symbols=symbols), t


def split_S(window: TwoSidedSymbolWindow, t: float) -> Tuple[FiniteWord, FiniteWord, float]:
    """Read back a = (x(1), x(2), ...) and b = (x(0), x(-1), ...)"""
    a = tuple(window.at(k) for k in range(1, window.hi + 1))
    b = tuple(window.at(k) for k in range(0, window.lo - 1, -1))
    return (FiniteWord(alphabet=window.alphabet, symbols=a),
            FiniteWord(alphabet=window.alphabet, symbols=b), t)


def exx2_apex_fiber(w: TwoSidedMahavierWindow, tol: Optional[float] = None) -> bool:
    """Every coordinate is 0 or 2, so the window collapses to the fan apex"""
    tol = settings.identity_tolerance if tol is None else tol
    return all(min(abs(v), abs(v - 2.0)) <= tol for v in w.values)
