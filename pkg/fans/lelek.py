"""
Endpoints of the Lelek fan I_H, the two-sided Mahavier product of relation H.

A window with a coordinate equal to 1 is an endpoint. lelek_endpoint_near
builds such a window close to a given one: 1 far to the left, a steering word
carrying 1 onto the value x(-m), then x's own branch choices on [-m, m] and
f0 above. Values are tracked as logs, so deep f0 runs never round through 0
before the last step.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from density import F0, F1, LOG2, SteeringWord, ranked_steering_words
from errors import OutOfRange, WindowTooShort, WitnessNotFound
from mahavier import metric_d2, relation_catalog
from maps import safe_exp, safe_log
from models import ClosedRelation, EndpointCertificate, LelekWindowPoint, TwoSidedMahavierWindow

logger = logging.getLogger(__name__)

# the steering table grows combinatorially with word length
MAX_STEERING_LENGTH = 30
EXTRA_DEPTHS = 4
CANDIDATES = 8


def relation_h() -> ClosedRelation:
    return relation_catalog("H")


def _log_step(choice: int, log_t):
    """ln f(e^log_t) for the branches of H; works on numpy arrays"""
    if choice == F0:
        return 3 * log_t - LOG2
    return log_t / 2


def _log_preimage(choice: int, log_t: float) -> Optional[float]:
    """ln f^-1(e^log_t), or None when the preimage leaves [0, 1]"""
    if choice == F0:
        return (log_t + LOG2) / 3 if log_t <= -LOG2 else None
    return 2 * log_t


def _window(relation: ClosedRelation, lo: int, logs: Sequence[float], choices: Sequence[int]) -> LelekWindowPoint:
    values = tuple(safe_exp(L) for L in logs)
    return LelekWindowPoint(window=TwoSidedMahavierWindow(
        relation=relation, lo=lo, hi=lo + len(values) - 1, values=values, choices=tuple(choices)
    ))


def is_endpoint_certified(x: LelekWindowPoint, tol: Optional[float] = None) -> Optional[EndpointCertificate]:
    """Index of the first coordinate equal to 1; None means unknown, not disproved"""
    tol = settings.identity_tolerance if tol is None else tol
    w = x.window
    for k, v in zip(range(w.lo, w.hi + 1), w.values):
        if abs(v - 1.0) <= tol:
            return EndpointCertificate(index=k)
    return None


def endpoint_depth(eps: float) -> int:
    """Smallest m with 2^-(m-1) < eps / 3"""
    m = 1
    while 2.0 ** -(m - 1) >= eps / 3:
        m += 1
    return m


def _propagation_cost(x: TwoSidedMahavierWindow, m: int, max_length: int):
    """Weighted distance to x on [-m, hi] of windows whose value at -m is each candidate"""
    def cost(logs: np.ndarray, lengths: np.ndarray) -> np.ndarray:
        L = logs.copy()
        total = np.zeros_like(L)
        for j in range(-m, x.hi + 1):
            total += np.abs(np.exp(L) - x.value_at(j)) / 2.0 ** abs(j)
            if j < x.hi:
                L = _log_step(x.choice_at(j) if j < m else F0, L)
        total[lengths > max_length] = np.inf
        return total
    return cost


def _endpoint_window(x: TwoSidedMahavierWindow, m: int, word: SteeringWord) -> Tuple[LelekWindowPoint, int]:
    """Window with 1 up to -m - len(word), the word up to -m, then x's choices and f0"""
    start = -m - word.length
    logs: List[float] = []
    choices: List[int] = []
    for _ in range(x.lo, start):
        logs.append(0.0)
        choices.append(F1)
    L = 0.0
    for symbol in word.symbols:
        logs.append(L)
        choices.append(symbol)
        L = _log_step(symbol, L)
    for j in range(-m, x.hi):
        logs.append(L)
        choice = x.choice_at(j) if j < m else F0
        choices.append(choice)
        L = _log_step(choice, L)
    logs.append(L)
    return _window(x.relation, x.lo, logs, choices), start


def lelek_endpoint_near(x: LelekWindowPoint, eps: float) -> Tuple[LelekWindowPoint, EndpointCertificate]:
    """A certified endpoint within eps of x in the truncated two-sided metric"""
    if eps <= 0:
        raise OutOfRange(f"eps must be positive, got {eps}")
    certificate = is_endpoint_certified(x)
    if certificate:
        return x, certificate

    w = x.window
    m_min = endpoint_depth(eps)
    if -w.lo < m_min + 1 or w.hi < m_min:
        raise WindowTooShort(f"window [{w.lo}, {w.hi}] is too short for eps {eps}: need [-{m_min + 1}, {m_min}]")

    best_error = math.inf
    for m in range(m_min, m_min + EXTRA_DEPTHS + 1):
        max_length = min(-w.lo - m, MAX_STEERING_LENGTH)
        if max_length < 0 or w.hi < m:
            break
        words = ranked_steering_words(
            min(-w.lo - m_min, MAX_STEERING_LENGTH), _propagation_cost(w, m, max_length), top=CANDIDATES
        )
        for word in words:
            if word.length > max_length:
                continue
            e, start = _endpoint_window(w, m, word)
            distance = metric_d2(w, e.window).value
            best_error = min(best_error, distance)
            if distance < eps:
                logger.debug(f"Endpoint at index {start}: depth {m}, steering {word.runs}, distance {distance:.3g}")
                return e, EndpointCertificate(index=start)
    raise WitnessNotFound(m_min + EXTRA_DEPTHS, best_error, f"no endpoint within {eps} of the window (best {best_error:.3g})")


def lelek_leg(backward_choices: Sequence[int], forward_choices: Sequence[int], t: float,
              relation: Optional[ClosedRelation] = None) -> LelekWindowPoint:
    """
    Point of the leg fixed by the choice words, with value t at index 0.

    Index -i is reached through the preimage under backward_choices[i-1]; the window
    stops where a preimage would leave [0, 1].
    """
    if not 0 <= t <= 1:
        raise OutOfRange(f"t must lie in [0, 1], got {t}")
    if not forward_choices:
        raise WindowTooShort("a window needs at least one forward step")
    relation = relation or relation_h()
    L = safe_log(t)

    back_logs, back_choices = [], []
    current = L
    for choice in backward_choices:
        previous = _log_preimage(choice, current)
        if previous is None:
            break
        back_logs.append(previous)
        back_choices.append(choice)
        current = previous

    logs = list(reversed(back_logs)) + [L]
    for choice in forward_choices:
        L = _log_step(choice, L)
        logs.append(L)
    choices = list(reversed(back_choices)) + list(forward_choices)
    return _window(relation, -len(back_logs), logs, choices)


def random_lelek_window(rng: np.random.Generator, lo: int, hi: int,
                        relation: Optional[ClosedRelation] = None) -> LelekWindowPoint:
    """x(0) uniform in (0, 1), uniform forward choices, uniform admissible backward choices"""
    if lo > 0 or hi < 1:
        raise OutOfRange(f"window [{lo}, {hi}] must contain 0 and 1")
    relation = relation or relation_h()
    t0 = float(rng.uniform(0.0, 1.0))
    while t0 == 0.0:
        t0 = float(rng.uniform(0.0, 1.0))
    L0 = math.log(t0)

    back_logs, back_choices = [], []
    current = L0
    for _ in range(-lo):
        options = [c for c in (F0, F1) if _log_preimage(c, current) is not None]
        choice = options[int(rng.integers(len(options)))]
        current = _log_preimage(choice, current)
        back_logs.append(current)
        back_choices.append(choice)

    forward = [F0 if rng.integers(2) == 0 else F1 for _ in range(hi)]
    logs = list(reversed(back_logs)) + [L0]
    for choice in forward:
        logs.append(_log_step(choice, logs[-1]))
    return _window(relation, lo, logs, list(reversed(back_choices)) + forward)


def sample_lelek_legs(rng: np.random.Generator, legs: int, samples: int, lo: int, hi: int,
                      relation: Optional[ClosedRelation] = None) -> List[LelekWindowPoint]:
    """Points at evenly spaced t on randomly chosen legs"""
    relation = relation or relation_h()
    windows = []
    for _ in range(legs):
        backward = [F0 if c == 0 else F1 for c in rng.integers(2, size=-lo)]
        forward = [F0 if c == 0 else F1 for c in rng.integers(2, size=hi)]
        for t in np.linspace(0.0, 1.0, samples):
            windows.append(lelek_leg(backward, forward, float(t), relation))
    return windows
