import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from errors import BudgetExceeded, NotInvertible, OutOfDomain, OutOfImage, OutOfRange, TooShort, WindowTooShort
from maps import invert
from models import ClosedRelation, Direction, MahavierWord, TwoSidedMahavierWindow
from .relations import Successor, expand

logger = logging.getLogger(__name__)

# values, ln values (None at 0 or off the log path), choices
_Node = Tuple[Tuple[float, ...], Optional[float], Tuple[int, ...]]


def _check_start(F: ClosedRelation, x: float):
    if not F.domain.contains(x):
        raise OutOfDomain(f"{x} is outside the relation domain")


def _children(F: ClosedRelation, node: _Node) -> List[_Node]:
    values, log_x, choices = node
    return [
        (values + (value,), log_value, choices + (k,))
        for k, value, log_value in expand(F, values[-1], log_x)
    ]


def _root(x: float) -> _Node:
    return ((x,), math.log(x) if x > 0 else None, ())


def _expand_levels(F: ClosedRelation, start: float, depth: int) -> List[List[_Node]]:
    levels = [[_root(start)]]
    for _ in range(depth):
        levels.append([child for node in levels[-1] for child in _children(F, node)])
    return levels


def enumerate_mahavier(F: ClosedRelation, start: float, depth: int,
                       node_budget: Optional[int] = None) -> List[MahavierWord]:
    """All deduplicated branch-choice expansions of length depth, in lexicographic order"""
    if depth < 1:
        raise OutOfRange(f"depth must be positive, got {depth}")
    _check_start(F, start)
    node_budget = settings.node_budget if node_budget is None else node_budget
    if depth * F.size ** depth > node_budget:
        raise BudgetExceeded(f"depth {depth} with {F.size} branches exceeds the node budget {node_budget}")

    leaves = _expand_levels(F, start, depth)[-1]
    logger.debug(f"Enumerated {len(leaves)} words of depth {depth} from {start}")
    return [MahavierWord(relation=F, values=values, choices=choices) for values, _, choices in leaves]


def shift_forward_truncated(w: MahavierWord) -> MahavierWord:
    """Drop x_1 and its branch choice"""
    if len(w.values) < 2:
        raise TooShort("a single value has nothing left after the shift")
    return w.model_copy(update={"values": w.values[1:], "choices": w.choices[1:]})


def shift_two_sided_window(w: TwoSidedMahavierWindow, direction: str = "forward") -> TwoSidedMahavierWindow:
    if direction == "forward":
        if w.hi < 2:
            raise WindowTooShort(f"forward shift of window [{w.lo}, {w.hi}] leaves no index 1")
        return w.model_copy(update={"lo": w.lo - 1, "hi": w.hi - 1})
    if direction == "backward":
        if w.lo > -1:
            raise WindowTooShort(f"backward shift of window [{w.lo}, {w.hi}] leaves no index 0")
        return w.model_copy(update={"lo": w.lo + 1, "hi": w.hi + 1})
    raise ValueError(f"unknown direction {direction}")


def random_window(F: ClosedRelation, rng: np.random.Generator, lo: int, hi: int) -> TwoSidedMahavierWindow:
    """x(0) uniform on a domain interval, then uniformly chosen successors forward and preimages backward"""
    if lo > 0 or hi < 1:
        raise OutOfRange(f"window [{lo}, {hi}] must contain 0 and 1")
    a, b = F.domain.intervals[int(rng.integers(len(F.domain.intervals)))]
    x0 = float(rng.uniform(a, b))

    values, choices = [x0], []
    for _ in range(hi):
        options = expand(F, values[-1])
        if not options:
            raise WindowTooShort(f"{values[-1]} has no successor in {F.name or 'the relation'}")
        k, value, _ = options[int(rng.integers(len(options)))]
        values.append(value)
        choices.append(k)

    back_values, back_choices = [], []
    current = x0
    for _ in range(-lo):
        options = []
        for k in range(1, F.size + 1):
            try:
                options.append((k, invert(F.branches.map(k), current)))
            except (NotInvertible, OutOfImage):
                continue
        if not options:
            raise WindowTooShort(f"{current} has no preimage in {F.name or 'the relation'}")
        k, current = options[int(rng.integers(len(options)))]
        back_values.append(current)
        back_choices.append(k)

    return TwoSidedMahavierWindow(
        relation=F, lo=lo, hi=hi,
        values=tuple(reversed(back_values)) + tuple(values),
        choices=tuple(reversed(back_choices)) + tuple(choices)
    )


def truncate(w: MahavierWord, m: int) -> MahavierWord:
    """First m steps, m + 1 values"""
    if m < 0 or m >= len(w.values):
        raise OutOfRange(f"cannot keep {m} steps of a word with {len(w.values) - 1}")
    return w.model_copy(update={"values": w.values[:m + 1], "choices": w.choices[:m]})


def stitch(words: Sequence[MahavierWord], lengths: Optional[Sequence[int]] = None) -> MahavierWord:
    """(x_1..x_n) * (y_1..y_m) = (x_1..x_n, y_2..y_m); each word is cut to its length first"""
    if not words:
        raise OutOfRange("nothing to stitch")
    if lengths is None:
        lengths = [len(w.values) for w in words]
    values: Tuple[float, ...] = ()
    choices: Tuple[int, ...] = ()
    for w, length in zip(words, lengths):
        if length > len(w.values):
            raise TooShort(f"word with {len(w.values)} values cut to {length}")
        head, steps = w.values[:length], w.choices[:length - 1]
        if values:
            if abs(values[-1] - head[0]) > settings.constraint_tolerance:
                raise ValueError(f"cannot stitch: {values[-1]} != {head[0]}")
            head = head[1:]
        values += head
        choices += steps
    return MahavierWord(relation=words[0].relation, values=values, choices=choices)


def inverse_relation_word(F: ClosedRelation, values: Sequence[float], choices: Sequence[int]) -> MahavierWord:
    """Word for F^-1: f_{choices[i]}(values[i+1]) = values[i]"""
    return MahavierWord(relation=F, values=tuple(values), choices=tuple(choices), direction=Direction.backward)


def forward_impression_sample(F: ClosedRelation, x: float, depth: int, budget: int,
                              seed: Optional[int] = None) -> List[float]:
    """
    Terminal values of branch walks from x with at most depth steps.

    When the whole tree fits in the budget every terminal value of every length is
    returned; otherwise budget random walks are drawn with uniform lengths.
    """
    if depth < 1 or budget < 1:
        raise OutOfRange("depth and budget must be positive")
    _check_start(F, x)
    tree = sum(F.size ** length for length in range(1, depth + 1))
    if tree <= budget:
        levels = _expand_levels(F, x, depth)
        return [node[0][-1] for level in levels[1:] for node in level]

    rng = np.random.default_rng(settings.seed if seed is None else seed)
    lengths = rng.integers(1, depth + 1, size=budget)
    samples: List[float] = []
    for length in lengths:
        value, log_value = x, (math.log(x) if x > 0 else None)
        for _ in range(int(length)):
            options: List[Successor] = expand(F, value, log_value)
            if not options:
                break
            _, value, log_value = options[int(rng.integers(len(options)))]
        samples.append(value)
    logger.debug(f"Sampled {len(samples)} impression values from {x}")
    return samples


def impression_coverage(samples: Sequence[float], lo: float = 0.0, hi: float = 1.0,
                        radius: float = 0.01) -> float:
    """Fraction of the grid lo, lo + radius, ..., hi lying within radius of a sample"""
    if not len(samples):
        return 0.0
    grid = np.linspace(lo, hi, int(round((hi - lo) / radius)) + 1)
    points = np.sort(np.asarray(samples, dtype=float))
    idx = np.clip(np.searchsorted(points, grid), 1, len(points) - 1) if len(points) > 1 else np.zeros(len(grid), int)
    nearest = np.minimum(np.abs(points[idx] - grid), np.abs(points[np.maximum(idx - 1, 0)] - grid))
    return float(np.mean(nearest <= radius + 1e-12))


CSV_CHOICE_SEP = " "


def csv_header(length: int) -> List[str]:
    return [f"value_{i}" for i in range(1, length + 1)] + ["choices"]


def csv_row(w: MahavierWord) -> List[str]:
    """value_1..value_{m+1} then the choices as one space separated field"""
    return [repr(v) for v in w.values] + [CSV_CHOICE_SEP.join(str(k) for k in w.choices)]
