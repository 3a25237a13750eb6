from typing import Optional


class FanlabError(Exception):
    """Base error; carries the process exit code used by the CLI"""

    exit_code: int = 1
    default_detail: str = "fanlab error"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)

    def to_dict(self) -> dict:
        return {"detail": self.detail, "exit_code": self.exit_code}


class UsageError(FanlabError):
    default_detail = "Invalid usage"


class WindowTooShort(FanlabError):
    default_detail = "Window too short for the requested operation"


class AlphabetMismatch(FanlabError):
    default_detail = "Alphabets differ"


class OutOfRange(FanlabError):
    default_detail = "Index or parameter out of range"


class OutOfDomain(FanlabError):
    default_detail = "Point outside the domain"


class OutOfImage(FanlabError):
    default_detail = "Point outside the image of the map"


class NotInvertible(FanlabError):
    default_detail = "Map is not invertible"


class UnknownName(FanlabError):
    default_detail = "Unknown catalog name"


class TooShort(FanlabError):
    default_detail = "Word too short"


class SeamViolation(FanlabError):
    default_detail = "Seam pair is not in the relation"


class LengthMismatch(FanlabError):
    default_detail = "Sequences have different lengths"


class WindowMismatch(FanlabError):
    default_detail = "Windows have different index ranges"


class NotApplicable(FanlabError):
    default_detail = "Relation does not satisfy the hypothesis of this construction"


class NotCompatible(FanlabError):
    default_detail = "Map does not respect the equivalence relation"


class WitnessNotFound(FanlabError):
    exit_code = 2
    default_detail = "No witness within bound"

    def __init__(self, bound: int, best_error: float, detail: Optional[str] = None):
        self.bound = bound
        self.best_error = best_error
        super().__init__(detail or f"No witness within bound {bound} (best error {best_error:.3g})")

    def to_dict(self) -> dict:
        data = super().to_dict()
        data.update({"bound": self.bound, "best_error": self.best_error})
        return data


class InfeasibleTarget(FanlabError):
    exit_code = 2
    default_detail = "Target does not meet the Mahavier product"


class TargetsMissed(FanlabError):
    exit_code = 2
    default_detail = "Some targets were not hit"


class BudgetExceeded(FanlabError):
    exit_code = 3
    default_detail = "Node budget exceeded"


class OutputError(FanlabError):
    exit_code = 4
    default_detail = "Could not write output"
