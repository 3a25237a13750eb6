import logging
import math
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from config import settings
from errors import OutOfDomain
from maps import catalog, log_eval, resolve_family
from models import ClosedRelation

logger = logging.getLogger(__name__)

# (branch index, value, ln value or None)
Successor = Tuple[int, float, Optional[float]]


def relation_catalog(name: str) -> ClosedRelation:
    return ClosedRelation.from_family(catalog(name))


def resolve_relation(source: str) -> ClosedRelation:
    return ClosedRelation.from_family(resolve_family(source))


def _same_value(a: Successor, b: Successor, tol: float) -> bool:
    if a[2] is not None and b[2] is not None:
        return abs(a[2] - b[2]) <= tol
    return abs(a[1] - b[1]) <= tol


def expand(F: ClosedRelation, x: float, log_x: Optional[float] = None, tol: Optional[float] = None) -> List[Successor]:
    """Deduplicated branch images of x; log values are carried when x > 0"""
    tol = settings.identity_tolerance if tol is None else tol
    out: List[Successor] = []
    for k in range(1, F.size + 1):
        f = F.branches.map(k)
        if f.piece_at(x) is None:
            continue
        log_value = None
        if log_x is not None and math.isfinite(log_x):
            try:
                log_value = log_eval(f, log_x)
            except OutOfDomain:
                log_value = None
        if log_value is not None:
            value = math.exp(log_value)
        else:
            value = f.value(x)
            log_value = math.log(value) if value > 0 else None
        candidate = (k, value, log_value)
        # lowest branch index wins on agreement
        if not any(_same_value(candidate, seen, tol) for seen in out):
            out.append(candidate)
    return out


def successors(F: ClosedRelation, x: float) -> List[Tuple[int, float]]:
    """Deduplicated (branch, f_branch(x)) pairs"""
    if not F.domain.contains(x):
        raise OutOfDomain(f"{x} is outside the relation domain")
    log_x = math.log(x) if x > 0 else None
    return [(k, value) for k, value, _ in expand(F, x, log_x)]


class HypothesisReport(BaseModel):
    """Branch agreement points and whether every branch fixes them"""
    model_config = ConfigDict(frozen=True)

    homeomorphic: bool
    roots: Tuple[float, ...]
    roots_fixed: bool

    @property
    def holds(self) -> bool:
        return self.homeomorphic and self.roots_fixed


def _bisect(d, a: float, b: float, iterations: int = 80) -> float:
    da = d(a)
    for _ in range(iterations):
        mid = 0.5 * (a + b)
        dm = d(mid)
        if dm == 0:
            return mid
        if (dm < 0) == (da < 0):
            a, da = mid, dm
        else:
            b = mid
    return 0.5 * (a + b)


@lru_cache(maxsize=64)
def interleave_hypothesis(F: ClosedRelation, grid: int = 20001) -> HypothesisReport:
    """Root isolation of f_i - f_j over the domain; each root must be fixed by every branch"""
    homeomorphic = all(
        f.invertible and f.domain == F.domain for f in F.branches.maps
    )
    roots: List[float] = []
    for lo, hi in F.domain.intervals:
        xs = np.linspace(lo, hi, grid)
        for i in range(1, F.size + 1):
            for j in range(i + 1, F.size + 1):
                fi, fj = F.branches.map(i), F.branches.map(j)

                def d(x, fi=fi, fj=fj):
                    return fi.value(x) - fj.value(x)

                values = [
                    d(float(x)) if fi.piece_at(x) and fj.piece_at(x) else None
                    for x in xs
                ]
                for k, v in enumerate(values):
                    if v is None:
                        continue
                    nxt = values[k + 1] if k + 1 < len(values) else None
                    if abs(v) <= settings.identity_tolerance:
                        roots.append(float(xs[k]))
                    elif nxt is not None and nxt != 0 and (v < 0) != (nxt < 0):
                        roots.append(_bisect(d, float(xs[k]), float(xs[k + 1])))
    distinct: List[float] = []
    for r in sorted(roots):
        if not distinct or r - distinct[-1] > 1e-9:
            distinct.append(r)
    roots_fixed = all(
        abs(F.branches.map(k).value(r) - r) <= settings.composition_tolerance
        for r in distinct for k in range(1, F.size + 1)
    )
    logger.debug(f"Hypothesis check for {F.name}: roots={distinct}, fixed={roots_fixed}")
    return HypothesisReport(homeomorphic=homeomorphic, roots=tuple(distinct), roots_fixed=roots_fixed)


def fixed_by_all(F: ClosedRelation, x: float, tol: Optional[float] = None) -> bool:
    """x belongs to the set of points every branch fixes"""
    tol = settings.composition_tolerance if tol is None else tol
    return all(
        (v := F.branch_value(k, x)) is not None and abs(v - x) <= tol
        for k in range(1, F.size + 1)
    )
