from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import settings
from .map_models import MapFamily
from .mahavier_models import MahavierWord
from .symbolic_models import FiniteWord, OneSidedWord, TwoSidedSymbolWindow


class ShiftSide(str, Enum):
    one_sided = "one-sided"
    two_sided = "two-sided"


class LemmaName(str, Enum):
    pow23 = "pow23"
    half_pow = "half-pow"
    property_l = "propertyL"
    gabi = "gabi"


class DensityWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    lemma: LemmaName
    exponents: Dict[str, int]
    achieved: float
    target: float
    eps: float = Field(gt=0)
    error: float = Field(ge=0)
    evaluations: int = 0

    @model_validator(mode="after")
    def check_error(self):
        if self.error >= self.eps:
            raise ValueError(f"witness error {self.error} does not beat eps {self.eps}")
        return self

    def to_json(self) -> dict:
        return {
            "exponents": dict(self.exponents),
            "achieved": self.achieved,
            "error": self.error,
            "evaluations": self.evaluations,
        }


class SkewSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: MapFamily
    side: ShiftSide = ShiftSide.one_sided


class SkewState(BaseModel):
    model_config = ConfigDict(frozen=True)

    symbols: Union[OneSidedWord, TwoSidedSymbolWindow]
    t: float


class CylinderTarget(BaseModel):
    """Leading-symbol word and/or boxes on leading real coordinates"""
    model_config = ConfigDict(frozen=True)

    word: Optional[FiniteWord] = None
    box: Optional[Tuple[Tuple[float, float], ...]] = None
    eps: float = Field(default=0.01, gt=0)

    @model_validator(mode="after")
    def check_nonempty(self):
        if not self.word and not self.box:
            raise ValueError("target needs a word or a value box")
        for lo, hi in self.box or ():
            if lo >= hi:
                raise ValueError(f"empty box interval ({lo}, {hi})")
        return self


class TransitiveTarget(BaseModel):
    model_config = ConfigDict(frozen=True)

    word: FiniteWord
    t: float


class TransitivePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    word: OneSidedWord
    x0: float
    hit_times: Tuple[int, ...] = ()
    eps_schedule: Tuple[float, ...] = ()
    cylinders: Tuple[FiniteWord, ...] = ()
    targets: Tuple[TransitiveTarget, ...] = ()


class SigmaChain(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: Tuple[MahavierWord, ...]
    lengths: Tuple[int, ...]
    depths: Tuple[int, ...]

    @model_validator(mode="after")
    def check_chain(self):
        if not len(self.points) == len(self.lengths) == len(self.depths):
            raise ValueError("points, lengths and depths must align")
        for j, (x, length, depth) in enumerate(zip(self.points, self.lengths, self.depths)):
            if length <= depth:
                raise ValueError(f"length {length} must exceed depth {depth}")
            if len(x.values) < length:
                raise ValueError(f"point {j} has fewer than {length} coordinates")
        for j in range(len(self.points) - 1):
            end = self.points[j].values[self.lengths[j] - 1]
            if abs(end - self.points[j + 1].values[0]) > settings.constraint_tolerance:
                raise ValueError(f"points {j} and {j + 1} do not chain")
        return self

    @property
    def offsets(self) -> List[int]:
        """Shift at which each point starts in the stitched word"""
        offsets, s = [], 0
        for length in self.lengths:
            offsets.append(s)
            s += length - 1
        return offsets


class CoverageRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    target_id: int
    hit_step: Optional[int] = None
    hit_distance: Optional[float] = None


class CoverageReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: Tuple[CoverageRow, ...] = ()

    @property
    def fraction_hit(self) -> float:
        if not self.rows:
            return 1.0
        return sum(row.hit_step is not None for row in self.rows) / len(self.rows)

    @property
    def all_hit(self) -> bool:
        return all(row.hit_step is not None for row in self.rows)
