import logging
from pathlib import Path
from typing import List, Tuple

from pydantic import BaseModel, ValidationError

from errors import UnknownName, UsageError
from models import ElementaryExpr, IntervalUnionDomain, MapFamily, Piece, PiecewiseMap
from .catalog import CATALOG, catalog

logger = logging.getLogger(__name__)


# Relation/family JSON schema
class PieceSpec(BaseModel):
    interval: Tuple[float, float]
    expr: ElementaryExpr


class BranchSpec(BaseModel):
    invertible: bool = False
    name: str = ""
    pieces: List[PieceSpec]


class FamilySpec(BaseModel):
    name: str = ""
    domain: List[Tuple[float, float]]
    branches: List[BranchSpec]

    def to_family(self) -> MapFamily:
        maps = tuple(
            PiecewiseMap(
                name=branch.name or f"f{k}",
                invertible=branch.invertible,
                pieces=tuple(Piece(interval=p.interval, expr=p.expr) for p in branch.pieces)
            )
            for k, branch in enumerate(self.branches, start=1)
        )
        return MapFamily(name=self.name, domain=IntervalUnionDomain(intervals=tuple(self.domain)), maps=maps)


def load_family(path: str) -> MapFamily:
    """Load a family from the relation JSON schema"""
    text = Path(path).read_text()
    try:
        spec = FamilySpec.model_validate_json(text)
        fam = spec.to_family()
    except ValidationError as e:
        raise UsageError(f"Invalid relation file {path}: {e.errors()[0]['msg']}")
    logger.info(f"Loaded family '{fam.name or path}' with {len(fam.maps)} maps")
    return fam


def resolve_family(source: str) -> MapFamily:
    """Catalog name or path to a JSON file"""
    if source in CATALOG:
        return catalog(source)
    if Path(source).is_file():
        return load_family(source)
    raise UnknownName(f"'{source}' is neither a catalog name nor a relation file")
