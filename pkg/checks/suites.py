import logging
import time
from typing import Callable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from config import settings
from errors import FanlabError

logger = logging.getLogger(__name__)

SUITES = ("density", "transitivity", "mahavier", "fans")
TABLE_HEADER = ["check", "suite", "status", "detail"]

CheckFn = Callable[[int], Tuple[bool, str]]


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    suite: str
    passed: bool
    detail: str = ""

    def row(self) -> List[str]:
        return [self.name, self.suite, "pass" if self.passed else "fail", self.detail]


class Check(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    suite: str
    fn: CheckFn


REGISTRY: List[Check] = []


def check(suite: str, name: str):
    """Register an acceptance check; the function takes a seed and returns (passed, detail)"""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")

    def register(fn: CheckFn) -> CheckFn:
        REGISTRY.append(Check(name=name, suite=suite, fn=fn))
        return fn
    return register


def _run(c: Check, seed: int) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = c.fn(seed)
    except (FanlabError, ValueError) as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - start
    logger.info(f"{c.suite}/{c.name}: {'pass' if passed else 'FAIL'} in {elapsed:.2f}s")
    return CheckResult(name=c.name, suite=c.suite, passed=passed, detail=detail)


def run_suite(suite: str = "all", seed: Optional[int] = None) -> List[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")
    seed = settings.seed if seed is None else seed
    return [_run(c, seed) for c in REGISTRY if suite in ("all", c.suite)]
