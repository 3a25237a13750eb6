import math
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import OutOfDomain
from .symbolic_models import Alphabet

BOUNDARY_TOL = 1e-12
CONTINUITY_TOL = 1e-9

# math.cbrt is Python 3.11+; numpy.cbrt wraps the same libm cbrt
_cbrt = getattr(math, "cbrt", None) or (lambda u: float(np.cbrt(u)))


class ExprKind(str, Enum):
    affine = "affine"
    power = "power"
    scaled_power = "scaled_power"


def odd_root_compatible(p: float) -> bool:
    """True when t**p has a real sign-preserving extension to t < 0"""
    q = Fraction(p).limit_denominator(64)
    return q.numerator % 2 == 1 and q.denominator % 2 == 1


def signed_power(u: float, p: float) -> float:
    if p == 0.5:
        if u < 0:
            raise OutOfDomain(f"square root of {u}")
        return math.sqrt(u)
    if abs(p - 1.0 / 3.0) < 1e-15:
        return _cbrt(u)
    if u >= 0:
        return u ** p
    if float(p).is_integer():
        return u ** int(p)
    if not odd_root_compatible(p):
        raise OutOfDomain(f"power {p} of negative value {u}")
    return -((-u) ** p)


class ElementaryExpr(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ExprKind
    a: float = 1.0
    b: float = 0.0
    p: float = 1.0
    c: float = 1.0
    s: float = 0.0

    @model_validator(mode="after")
    def check_parameters(self):
        if self.kind == ExprKind.affine and self.a == 0:
            raise ValueError("affine slope must be nonzero")
        if self.kind != ExprKind.affine and self.p <= 0:
            raise ValueError("power must be positive")
        if self.kind == ExprKind.scaled_power and self.c == 0:
            raise ValueError("scale must be nonzero")
        return self

    def value(self, t: float) -> float:
        if self.kind == ExprKind.affine:
            return self.a * t + self.b
        if self.kind == ExprKind.power:
            return signed_power(t, self.p)
        return self.c * signed_power(t - self.s, self.p) + self.s

    def inverse(self, y: float) -> float:
        if self.kind == ExprKind.affine:
            return (y - self.b) / self.a
        if self.kind == ExprKind.power:
            return signed_power(y, 1.0 / self.p)
        return self.s + signed_power((y - self.s) / self.c, 1.0 / self.p)

    def log_value(self, log_t: float) -> Optional[float]:
        """ln(value(e^log_t)), or None when the piece has no positive log form"""
        if self.kind == ExprKind.power:
            return self.p * log_t
        if self.kind == ExprKind.scaled_power:
            if self.s == 0 and self.c > 0:
                return math.log(self.c) + self.p * log_t
            return None
        if self.b == 0:
            return log_t + math.log(self.a) if self.a > 0 else None
        # a*e^l + b = 1 + (a*expm1(l) + a + b - 1)
        inner = self.a * math.expm1(log_t) + (self.a + self.b - 1.0)
        if inner <= -1.0:
            return None
        return math.log1p(inner)

    @property
    def is_linear(self) -> bool:
        """t -> a*t with a > 0, so iterates have a closed form in log space"""
        if self.kind == ExprKind.affine:
            return self.b == 0 and self.a > 0
        return self.kind != ExprKind.affine and self.p == 1.0 and self.s == 0 and self.c > 0

    @property
    def log_slope(self) -> float:
        return math.log(self.a if self.kind == ExprKind.affine else self.c)


class IntervalUnionDomain(BaseModel):
    model_config = ConfigDict(frozen=True)

    intervals: Tuple[Tuple[float, float], ...] = Field(min_length=1)

    @model_validator(mode="after")
    def check_intervals(self):
        for a, b in self.intervals:
            if a > b:
                raise ValueError(f"interval [{a}, {b}] is reversed")
        for (_, b0), (a1, _) in zip(self.intervals, self.intervals[1:]):
            if a1 <= b0:
                raise ValueError("intervals must be sorted and disjoint")
        return self

    @property
    def lower(self) -> float:
        return self.intervals[0][0]

    @property
    def upper(self) -> float:
        return self.intervals[-1][1]

    @property
    def diam(self) -> float:
        return self.upper - self.lower

    def contains(self, t: float, tol: float = BOUNDARY_TOL) -> bool:
        return any(a - tol <= t <= b + tol for a, b in self.intervals)

    def contains_domain(self, other: "IntervalUnionDomain", tol: float = CONTINUITY_TOL) -> bool:
        return all(
            any(a - tol <= c and d <= b + tol for a, b in self.intervals)
            for c, d in other.intervals
        )


class Piece(BaseModel):
    model_config = ConfigDict(frozen=True)

    interval: Tuple[float, float]
    expr: ElementaryExpr

    def image(self) -> Tuple[float, float]:
        lo, hi = self.expr.value(self.interval[0]), self.expr.value(self.interval[1])
        return (min(lo, hi), max(lo, hi))


class PiecewiseMap(BaseModel):
    model_config = ConfigDict(frozen=True)

    pieces: Tuple[Piece, ...] = Field(min_length=1)
    invertible: bool = False
    name: str = ""

    @model_validator(mode="after")
    def check_pieces(self):
        for piece in self.pieces:
            if piece.interval[0] > piece.interval[1]:
                raise ValueError(f"piece interval {piece.interval} is reversed")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if right.interval[0] < left.interval[1]:
                raise ValueError("pieces must be sorted and non-overlapping")
            if right.interval[0] == left.interval[1]:
                at = left.interval[1]
                if abs(left.expr.value(at) - right.expr.value(at)) > CONTINUITY_TOL:
                    raise ValueError(f"pieces disagree at breakpoint {at}")
        return self

    @property
    def domain(self) -> IntervalUnionDomain:
        merged: List[List[float]] = []
        for piece in self.pieces:
            a, b = piece.interval
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return IntervalUnionDomain(intervals=tuple((a, b) for a, b in merged))

    def piece_at(self, t: float, tol: float = BOUNDARY_TOL) -> Optional[Piece]:
        for piece in self.pieces:
            a, b = piece.interval
            if a - tol <= t <= b + tol:
                return piece
        return None

    def value(self, t: float) -> float:
        piece = self.piece_at(t)
        if piece is None:
            raise OutOfDomain(f"{t} is outside the domain of {self.name or 'map'}")
        a, b = piece.interval
        return piece.expr.value(min(max(t, a), b))


class MapFamily(BaseModel):
    """Maps f_1..f_n indexed by the symbols of an alphabet"""
    model_config = ConfigDict(frozen=True)

    maps: Tuple[PiecewiseMap, ...] = Field(min_length=1)
    domain: IntervalUnionDomain
    name: str = ""

    @model_validator(mode="after")
    def check_common_domain(self):
        for f in self.maps:
            if not self.domain.contains_domain(f.domain):
                raise ValueError(f"map {f.name} is defined outside the family domain")
        return self

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(size=len(self.maps))

    def map(self, k: int) -> PiecewiseMap:
        """Map for 1-based symbol k"""
        if not 1 <= k <= len(self.maps):
            raise IndexError(k)
        return self.maps[k - 1]
