import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from errors import UsageError
from models import Alphabet, CylinderTarget, FiniteWord

logger = logging.getLogger(__name__)


# Target JSON schema
class TargetSpec(BaseModel):
    word: Optional[List[int]] = None
    box: Optional[List[Tuple[float, float]]] = None
    eps: float = Field(default=0.01, gt=0)

    def to_target(self, alphabet: Alphabet) -> CylinderTarget:
        word = FiniteWord(alphabet=alphabet, symbols=tuple(self.word)) if self.word else None
        box = tuple(tuple(b) for b in self.box) if self.box else None
        return CylinderTarget(word=word, box=box, eps=self.eps)


class TargetFile(BaseModel):
    targets: List[TargetSpec] = []


def load_targets(path: str, alphabet: Alphabet) -> List[CylinderTarget]:
    """{"targets": [{"word": [2], "box": [[0.2, 0.3]], "eps": 0.01}]}"""
    text = Path(path).read_text()
    try:
        targets = [spec.to_target(alphabet) for spec in TargetFile.model_validate_json(text).targets]
    except ValidationError as e:
        raise UsageError(f"Invalid targets file {path}: {e.errors()[0]['msg']}")
    logger.info(f"Loaded {len(targets)} targets from {path}")
    return targets
