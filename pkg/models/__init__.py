from .symbolic_models import Alphabet, FiniteWord, OneSidedWord, TwoSidedSymbolWindow
from .map_models import (
    ExprKind, ElementaryExpr, IntervalUnionDomain, Piece, PiecewiseMap, MapFamily,
    signed_power, odd_root_compatible
)
from .mahavier_models import (
    Direction, ClosedRelation, MahavierWord, TwoSidedMahavierWindow, MetricValue
)
from .dynamics_models import (
    ShiftSide, LemmaName, DensityWitness, SkewSystem, SkewState,
    CylinderTarget, TransitiveTarget, TransitivePoint, SigmaChain,
    CoverageRow, CoverageReport
)
from .fan_models import Apex, Leg, WindowLeg, FanPoint, LelekWindowPoint, EndpointCertificate, RenderKind

__all__ = [
    # Symbolic
    "Alphabet", "FiniteWord", "OneSidedWord", "TwoSidedSymbolWindow",

    # Maps
    "ExprKind", "ElementaryExpr", "IntervalUnionDomain", "Piece", "PiecewiseMap", "MapFamily",
    "signed_power", "odd_root_compatible",

    # Mahavier products
    "Direction", "ClosedRelation", "MahavierWord", "TwoSidedMahavierWindow", "MetricValue",

    # Dynamics
    "ShiftSide", "LemmaName", "DensityWitness", "SkewSystem", "SkewState",
    "CylinderTarget", "TransitiveTarget", "TransitivePoint", "SigmaChain",
    "CoverageRow", "CoverageReport",

    # Fans
    "Apex", "Leg", "WindowLeg", "FanPoint", "LelekWindowPoint", "EndpointCertificate", "RenderKind"
]
