from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import settings
from .map_models import CONTINUITY_TOL, IntervalUnionDomain, MapFamily
from .symbolic_models import Alphabet, FiniteWord


class Direction(str, Enum):
    forward = "forward"
    backward = "backward"


class ClosedRelation(BaseModel):
    """F as the union of the graphs of its branch maps"""
    model_config = ConfigDict(frozen=True)

    branches: MapFamily
    domain: IntervalUnionDomain
    name: str = ""

    @model_validator(mode="after")
    def check_images(self):
        for f in self.branches.maps:
            for piece in f.pieces:
                lo, hi = piece.image()
                if not (self.domain.contains(lo, CONTINUITY_TOL) and self.domain.contains(hi, CONTINUITY_TOL)):
                    raise ValueError(f"branch {f.name} leaves the domain on {piece.interval}")
        return self

    @classmethod
    def from_family(cls, family: MapFamily) -> "ClosedRelation":
        return cls(branches=family, domain=family.domain, name=family.name)

    @property
    def size(self) -> int:
        return len(self.branches.maps)

    @property
    def alphabet(self) -> Alphabet:
        return self.branches.alphabet

    @property
    def diam(self) -> float:
        return self.domain.diam

    def branch_value(self, k: int, x: float) -> Optional[float]:
        """f_k(x), or None where branch k is undefined"""
        f = self.branches.map(k)
        if f.piece_at(x) is None:
            return None
        return f.value(x)

    def step_ok(self, k: int, x: float, y: float, tol: Optional[float] = None) -> bool:
        tol = settings.constraint_tolerance if tol is None else tol
        value = self.branch_value(k, x)
        return value is not None and abs(value - y) <= tol


def _check_chain(relation: ClosedRelation, values, choices, backward: bool = False):
    if len(choices) != len(values) - 1:
        raise ValueError("need exactly one branch choice per consecutive pair")
    for x in values:
        if not relation.domain.contains(x, CONTINUITY_TOL):
            raise ValueError(f"value {x} outside the relation domain")
    for i, k in enumerate(choices):
        if not 1 <= k <= relation.size:
            raise ValueError(f"branch index {k} out of range")
        x, y = values[i], values[i + 1]
        if backward:
            x, y = y, x
        if not relation.step_ok(k, x, y):
            raise ValueError(f"pair ({x}, {y}) is not on branch {k}")


class MahavierWord(BaseModel):
    """x_1..x_{m+1} with a branch certificate for each consecutive pair"""
    model_config = ConfigDict(frozen=True)

    relation: ClosedRelation
    values: Tuple[float, ...] = Field(min_length=1)
    choices: Tuple[int, ...] = ()
    direction: Direction = Direction.forward

    @model_validator(mode="after")
    def check_constraint(self):
        _check_chain(self.relation, self.values, self.choices, self.direction == Direction.backward)
        return self

    def __len__(self) -> int:
        return len(self.values)

    @property
    def choice_word(self) -> FiniteWord:
        return FiniteWord(alphabet=self.relation.alphabet, symbols=self.choices)


class TwoSidedMahavierWindow(BaseModel):
    """Values at lo..hi, choices at lo..hi-1 with x(k+1) = f_{m(k)}(x(k))"""
    model_config = ConfigDict(frozen=True)

    relation: ClosedRelation
    lo: int = Field(le=0)
    hi: int = Field(ge=1)
    values: Tuple[float, ...]
    choices: Tuple[int, ...]

    @model_validator(mode="after")
    def check_constraint(self):
        if len(self.values) != self.hi - self.lo + 1:
            raise ValueError("window length must be hi - lo + 1")
        _check_chain(self.relation, self.values, self.choices)
        return self

    def value_at(self, k: int) -> float:
        if not self.lo <= k <= self.hi:
            raise IndexError(k)
        return self.values[k - self.lo]

    def choice_at(self, k: int) -> int:
        if not self.lo <= k < self.hi:
            raise IndexError(k)
        return self.choices[k - self.lo]


class MetricValue(BaseModel):
    """Truncated metric value with a bound on the neglected tail"""
    model_config = ConfigDict(frozen=True)

    value: float
    bound: float
