"""
Chains of Mahavier words visiting a list of cylinder targets for relation H.

Each target is turned into backward-feasible interval sets S_1..S_m: S_m is the
last box, S_i is the i-th box intersected with the preimages of S_{i+1} under
the allowed branches. A point in S_1 always has a forward continuation through
the target. Consecutive targets are joined by a steering block f1^k o f0^h.
"""

import logging
import math
from fractions import Fraction
from itertools import count
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from density import F0, F1, search_gabi_log
from errors import InfeasibleTarget, NotApplicable, TargetsMissed, WitnessNotFound
from mahavier import stitch
from models import (
    ClosedRelation, CoverageReport, CoverageRow, CylinderTarget, MahavierWord, SigmaChain
)

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]

STEERING_ATTEMPTS = 4


def _check_relation_h(F: ClosedRelation):
    if F.size != 2:
        raise NotApplicable(f"steering needs the two branches of H, {F.name or 'relation'} has {F.size}")
    probes = np.linspace(0.0, 1.0, 11)
    for t in probes:
        f0, f1 = F.branch_value(F0, t), F.branch_value(F1, t)
        if f0 is None or f1 is None or abs(f0 - t ** 3 / 2) > 1e-12 or abs(f1 - math.sqrt(t)) > 1e-12:
            raise NotApplicable(f"{F.name or 'relation'} is not the relation H")


def _inside(F: ClosedRelation, v: float, interval: Interval) -> bool:
    """Open membership, closed at the domain boundary"""
    lo, hi = interval
    above = lo < v or (v == lo == F.domain.lower)
    below = v < hi or (v == hi == F.domain.upper)
    return above and below


def _inside_any(F: ClosedRelation, v: float, intervals: Sequence[Interval]) -> Optional[Interval]:
    for interval in intervals:
        if _inside(F, v, interval):
            return interval
    return None


def _merge(intervals: Sequence[Interval]) -> List[Interval]:
    merged: List[List[float]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def _intersect(a: Sequence[Interval], b: Sequence[Interval]) -> List[Interval]:
    out = []
    for lo1, hi1 in a:
        for lo2, hi2 in b:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if lo < hi:
                out.append((lo, hi))
    return _merge(out)


def _preimage(F: ClosedRelation, k: int, intervals: Sequence[Interval]) -> List[Interval]:
    """Preimage of an interval union under the monotone pieces of branch k"""
    out = []
    for piece in F.branches.map(k).pieces:
        p, q = piece.image()
        a, b = piece.interval
        for lo, hi in intervals:
            lo, hi = max(lo, p), min(hi, q)
            if lo >= hi:
                continue
            ends = sorted((piece.expr.inverse(lo), piece.expr.inverse(hi)))
            lo_x, hi_x = max(ends[0], a), min(ends[1], b)
            if lo_x < hi_x:
                out.append((lo_x, hi_x))
    return _merge(out)


def target_depth(target: CylinderTarget) -> int:
    """Number of leading coordinates the target constrains"""
    word_depth = len(target.word) + 1 if target.word else 0
    return max(len(target.box or ()), word_depth)


def _allowed(F: ClosedRelation, target: CylinderTarget, i: int) -> List[int]:
    """Branches allowed between coordinates i and i + 1 (0-based)"""
    if target.word and i < len(target.word):
        return [target.word.symbols[i]]
    return list(range(1, F.size + 1))


def feasible_sets(F: ClosedRelation, target: CylinderTarget) -> List[List[Interval]]:
    """S_1..S_m; an empty S_1 means the target misses the Mahavier product"""
    m = target_depth(target)
    domain = list(F.domain.intervals)
    boxes = [_intersect([box], domain) for box in target.box or ()]
    boxes += [domain] * (m - len(boxes))
    sets = [boxes[-1]]
    for i in range(m - 2, -1, -1):
        reachable = _merge([iv for k in _allowed(F, target, i) for iv in _preimage(F, k, sets[0])])
        sets.insert(0, _intersect(boxes[i], reachable))
    return sets


def _margin(v: float, interval: Interval) -> float:
    return min(v - interval[0], interval[1] - v)


def _forward(F: ClosedRelation, target: CylinderTarget, sets: List[List[Interval]],
             start: float) -> Optional[Tuple[List[float], List[int]]]:
    """Greedy walk through S_1..S_m keeping the widest margin; None if a step has no admissible branch"""
    if not _inside_any(F, start, sets[0]):
        return None
    values, choices = [start], []
    for i in range(len(sets) - 1):
        best = None
        for k in _allowed(F, target, i):
            v = F.branch_value(k, values[-1])
            if v is None:
                continue
            interval = _inside_any(F, v, sets[i + 1])
            if interval and (best is None or _margin(v, interval) > best[0]):
                best = (_margin(v, interval), k, v)
        if best is None:
            return None
        values.append(best[2])
        choices.append(best[1])
    return values, choices


def _start_candidates(F: ClosedRelation, sets: List[List[Interval]]) -> List[float]:
    """The domain's upper end when the target admits it, then midpoints, widest first"""
    candidates = []
    if _inside_any(F, F.domain.upper, sets[0]):
        candidates.append(F.domain.upper)
    for lo, hi in sorted(sets[0], key=lambda iv: iv[0] - iv[1]):
        candidates.append((lo + hi) / 2)
    return candidates


def _enter(F: ClosedRelation, target: CylinderTarget, sets: List[List[Interval]],
           start: Optional[float], j: int) -> Tuple[List[float], List[int]]:
    starts = [start] if start is not None else _start_candidates(F, sets)
    for x in starts:
        walk = _forward(F, target, sets, x)
        if walk:
            return walk
    raise InfeasibleTarget(f"target {j} has no admissible point starting from {starts}")


def _steer(F: ClosedRelation, y: float, sets: List[List[Interval]], bound: Optional[int]) -> Tuple[List[float], List[int]]:
    """Values and choices of f1^k o f0^h from y into the widest interval of S_1"""
    if y <= 0:
        raise InfeasibleTarget("the chain is stuck at 0, which both branches fix")
    lo, hi = max(sets[0], key=lambda iv: iv[1] - iv[0])
    centre = (lo + hi) / 2
    eps = (hi - lo) / 2
    log_y = math.log(y)
    for _ in range(STEERING_ATTEMPTS):
        witness = search_gabi_log(log_y, centre, eps, bound)
        h, k = witness.exponents["h"], witness.exponents["k"]
        logs = [log_y]
        for _ in range(h):
            logs.append(3 * logs[-1] - math.log(2))
        for _ in range(k):
            logs.append(logs[-1] / 2)
        values = [math.exp(L) for L in logs[1:]]
        if _inside_any(F, values[-1], sets[0]):
            return values, [F0] * h + [F1] * k
        eps /= 2
    raise WitnessNotFound(bound or settings.default_bound, abs(values[-1] - centre),
                          f"steering from {y} lands outside ({lo}, {hi})")


def build_sigma_chain(F: ClosedRelation, targets: Sequence[CylinderTarget],
                      bound: Optional[int] = None) -> SigmaChain:
    _check_relation_h(F)
    if not targets:
        raise InfeasibleTarget("a chain needs at least one target")
    all_sets = []
    for j, target in enumerate(targets):
        sets = feasible_sets(F, target)
        if not sets[0]:
            raise InfeasibleTarget(f"target {j} does not meet the Mahavier product of {F.name or 'the relation'}")
        all_sets.append(sets)

    points, lengths, depths = [], [], []
    start = None
    for j, (target, sets) in enumerate(zip(targets, all_sets)):
        values, choices = _enter(F, target, sets, start, j)
        m = len(values)
        if j + 1 < len(targets):
            steer_values, steer_choices = _steer(F, values[-1], all_sets[j + 1], bound)
            values += steer_values
            choices += steer_choices
            start = values[-1]
        else:
            k = next(k for k in range(1, F.size + 1) if F.branch_value(k, values[-1]) is not None)
            values.append(F.branch_value(k, values[-1]))
            choices.append(k)
        logger.debug(f"Chain point {j}: depth {m}, length {len(values)}")
        points.append(MahavierWord(relation=F, values=tuple(values), choices=tuple(choices)))
        lengths.append(len(values))
        depths.append(m)

    chain = SigmaChain(points=tuple(points), lengths=tuple(lengths), depths=tuple(depths))
    report = verify_sigma_chain(chain, targets)
    if not report.all_hit:
        missed = [row.target_id for row in report.rows if row.hit_step is None]
        raise TargetsMissed(f"stitched chain misses targets {missed}")
    logger.info(f"Chain through {len(targets)} targets, stitched length {sum(lengths) - len(lengths) + 1}")
    return chain


def in_target(F: ClosedRelation, values: Sequence[float], choices: Sequence[int], target: CylinderTarget) -> bool:
    m = target_depth(target)
    if len(values) < m:
        return False
    if target.word and tuple(choices[:len(target.word)]) != target.word.symbols:
        return False
    return all(_inside(F, v, box) for v, box in zip(values, target.box or ()))


def box_distance(values: Sequence[float], target: CylinderTarget) -> float:
    return max((abs(v - (lo + hi) / 2) for v, (lo, hi) in zip(values, target.box or ())), default=0.0)


def verify_sigma_chain(chain: SigmaChain, targets: Sequence[CylinderTarget]) -> CoverageReport:
    """Shift the stitched word by each offset and test membership in the matching target"""
    stitched = stitch(chain.points, chain.lengths)
    F = stitched.relation
    rows = []
    for j, (s, target) in enumerate(zip(chain.offsets, targets)):
        values, choices = stitched.values[s:], stitched.choices[s:]
        if in_target(F, values, choices, target):
            rows.append(CoverageRow(target_id=j, hit_step=s, hit_distance=box_distance(values, target)))
        else:
            rows.append(CoverageRow(target_id=j))
    return CoverageReport(rows=tuple(rows))


def auto_boxes(F: ClosedRelation, n: int) -> List[CylinderTarget]:
    """Dyadic boxes level by level: single-coordinate boxes, then feasible two-coordinate boxes"""
    lo, width = F.domain.lower, F.domain.diam
    out: List[CylinderTarget] = []
    for level in count(1):
        cells = [
            (lo + width * float(Fraction(j, 2 ** level)), lo + width * float(Fraction(j + 1, 2 ** level)))
            for j in range(2 ** level)
        ]
        candidates = [(cell,) for cell in cells] + [(a, b) for a in cells for b in cells]
        for box in candidates:
            if len(out) == n:
                return out
            target = CylinderTarget(box=box)
            if feasible_sets(F, target)[0]:
                out.append(target)
