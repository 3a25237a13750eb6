from enum import Enum
from typing import Annotated, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .mahavier_models import TwoSidedMahavierWindow
from .symbolic_models import OneSidedWord, TwoSidedSymbolWindow


class RenderKind(str, Enum):
    cantor = "cantor"
    lelek = "lelek"
    relation = "relation"


class Apex(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["apex"] = "apex"


class Leg(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["leg"] = "leg"
    symbols: Union[TwoSidedSymbolWindow, Tuple[OneSidedWord, OneSidedWord]]
    t: float = Field(ge=0, lt=1)


class WindowLeg(BaseModel):
    """Leg representative of a Mahavier-window quotient"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["window"] = "window"
    window: TwoSidedMahavierWindow


FanPoint = Annotated[Union[Apex, Leg, WindowLeg], Field(discriminator="kind")]


class LelekWindowPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    window: TwoSidedMahavierWindow

    @model_validator(mode="after")
    def check_unit_values(self):
        if any(v < 0 or v > 1 for v in self.window.values):
            raise ValueError("I_H windows take values in [0, 1]")
        return self


class EndpointCertificate(BaseModel):
    """Index of a coordinate equal to 1"""
    model_config = ConfigDict(frozen=True)

    index: int
