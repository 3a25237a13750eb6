import logging
import math
from fractions import Fraction
from itertools import count
from typing import Iterator, List, Optional, Sequence, Tuple

from config import settings
from density import property_l_block, search_propertyL_log
from errors import OutOfRange, TargetsMissed, UsageError
from maps import compose_runs_log, compose_word_log, safe_exp
from models import (
    Alphabet, CoverageReport, CoverageRow, CylinderTarget, FiniteWord, MapFamily,
    OneSidedWord, TransitivePoint, TransitiveTarget
)
from symbolic import closeness_depth, enumerate_words

logger = logging.getLogger(__name__)

TAIL_SYMBOL = 1


def eps_schedule(n: int, floor: float = 0.0) -> List[float]:
    """eps_i = 2^-i for i = 1..n, never below floor"""
    return [max(2.0 ** -i, floor) for i in range(1, n + 1)]


def _words(alphabet: Alphabet) -> Iterator[FiniteWord]:
    for length in count(1):
        yield from enumerate_words(alphabet, length)


def _dyadics() -> Iterator[float]:
    """1/2, 1/4, 3/4, 1/8, 3/8, ..."""
    for level in count(1):
        for j in range(1, 2 ** level, 2):
            yield float(Fraction(j, 2 ** level))


def auto_targets(alphabet: Alphabet, n: int) -> List[TransitiveTarget]:
    """First n (word, dyadic) pairs along the diagonals of the pairing grid"""
    words, dyadics = [], []
    words_it, dyadics_it = _words(alphabet), _dyadics()
    targets = []
    for diagonal in count(0):
        while len(words) <= diagonal:
            words.append(next(words_it))
            dyadics.append(next(dyadics_it))
        for i in range(diagonal + 1):
            if len(targets) == n:
                return targets
            targets.append(TransitiveTarget(word=words[i], t=dyadics[diagonal - i]))


def targets_from_cylinders(cylinders: Sequence[CylinderTarget]) -> Tuple[List[TransitiveTarget], List[float]]:
    """Word targets with t at the centre of the first box (0.5 without one); eps shrinks to fit the box"""
    targets, schedule = [], []
    for i, c in enumerate(cylinders):
        if not c.word:
            raise UsageError(f"target {i} needs a symbol word for a transitive point")
        eps = c.eps
        t = 0.5
        if c.box:
            lo, hi = c.box[0]
            t = (lo + hi) / 2
            eps = min(eps, (hi - lo) / 2)
        targets.append(TransitiveTarget(word=c.word, t=t))
        schedule.append(eps)
    return targets, schedule


def _cylinder(target: TransitiveTarget, eps: float) -> Tuple[int, ...]:
    """Target word padded with the tail symbol to the depth eps asks for"""
    depth = max(len(target.word), closeness_depth(eps))
    return target.word.symbols + (TAIL_SYMBOL,) * (depth - len(target.word))


def _check_inputs(family: MapFamily, targets: Sequence[TransitiveTarget], schedule: Sequence[float], x0: float):
    if not 0 < x0 < 1:
        raise OutOfRange(f"x0 must lie in (0, 1), got {x0}")
    if len(schedule) != len(targets):
        raise UsageError(f"{len(targets)} targets but {len(schedule)} tolerances")
    if any(eps <= 0 for eps in schedule):
        raise OutOfRange("tolerances must be positive")
    for i, target in enumerate(targets):
        if target.word.alphabet != family.alphabet:
            raise UsageError(f"target {i} is not a word over the family alphabet")
        if not 0 <= target.t <= 1:
            raise OutOfRange(f"target {i} has t = {target.t} outside [0, 1]")


def build_transitive_point(family: MapFamily, targets: Sequence[TransitiveTarget],
                           schedule: Optional[Sequence[float]] = None, x0: float = 0.5,
                           bound: Optional[int] = None) -> TransitivePoint:
    """
    Prefix whose skew orbit from x0 visits every target in turn.

    Blocks alternate: a property-L block steering the current value to t_i,
    then the padded target word. Hit i happens right before its word.
    """
    targets = list(targets)
    schedule = list(schedule) if schedule is not None else eps_schedule(len(targets))
    _check_inputs(family, targets, schedule, x0)

    symbols: List[int] = []
    hit_times, cylinders = [], []
    log_t = math.log(x0)
    for i, (target, eps) in enumerate(zip(targets, schedule)):
        witness = search_propertyL_log(family, log_t, target.t, eps, bound)
        e = witness.exponents
        runs = property_l_block(e["m"], e["k"], e["n"])
        for symbol, times in runs:
            symbols.extend([symbol] * times)
        log_t = compose_runs_log(family, runs, log_t)
        hit_times.append(len(symbols))

        cylinder = _cylinder(target, eps)
        cylinders.append(FiniteWord(alphabet=family.alphabet, symbols=cylinder))
        symbols.extend(cylinder)
        log_t = compose_word_log(family, cylinder, log_t)
        logger.info(f"Target {i}: hit at step {hit_times[-1]} with exponents {e}, prefix length {len(symbols)}")

    while symbols and symbols[-1] == TAIL_SYMBOL:
        symbols.pop()
    point = TransitivePoint(
        word=OneSidedWord(prefix=FiniteWord(alphabet=family.alphabet, symbols=tuple(symbols)), tail_symbol=TAIL_SYMBOL),
        x0=x0,
        hit_times=tuple(hit_times),
        eps_schedule=tuple(schedule),
        cylinders=tuple(cylinders),
        targets=tuple(targets)
    )
    report = verify_transitive_point(family, point)
    if not report.all_hit:
        missed = [row.target_id for row in report.rows if row.hit_step is None]
        raise TargetsMissed(f"constructed prefix misses targets {missed}")
    return point


def verify_transitive_point(family: MapFamily, point: TransitivePoint,
                            slack: Optional[float] = None) -> CoverageReport:
    """Iterate the skew orbit from x0 and check each recorded hit"""
    slack = settings.hit_slack if slack is None else slack
    rows = []
    log_t = math.log(point.x0)
    position = 0
    for i, (s, eps, cylinder, target) in enumerate(zip(point.hit_times, point.eps_schedule, point.cylinders, point.targets)):
        if s < position:
            rows.append(CoverageRow(target_id=i))
            continue
        log_t = compose_word_log(family, point.word.take(s)[position:], log_t)
        position = s
        leading = point.word.take(s + len(cylinder))[s:]
        distance = abs(safe_exp(log_t) - target.t)
        hit = leading == cylinder.symbols and leading[:len(target.word)] == target.word.symbols and distance < eps + slack
        rows.append(CoverageRow(target_id=i, hit_step=s if hit else None, hit_distance=distance))
    return CoverageReport(rows=tuple(rows))


def first_targets(alphabet: Alphabet, n: int, floor: float = 0.0) -> Tuple[List[TransitiveTarget], List[float]]:
    """Auto targets together with the default schedule"""
    return auto_targets(alphabet, n), eps_schedule(n, floor)
