from typing import List, Sequence, Union

from models import CoverageReport, CoverageRow, CylinderTarget, MahavierWord, OneSidedWord, SkewState
from .sigma_chain import box_distance, in_target

OrbitPoint = Union[SkewState, MahavierWord]

CSV_HEADER = ["target_id", "hit_step", "hit_distance"]


def _leading(symbols, n: int):
    if isinstance(symbols, OneSidedWord):
        return symbols.take(n)
    return tuple(symbols.at(k) for k in range(1, min(n, symbols.hi) + 1))


def _state_hit(s: SkewState, target: CylinderTarget) -> bool:
    if target.word and _leading(s.symbols, len(target.word)) != target.word.symbols:
        return False
    if target.box:
        lo, hi = target.box[0]
        return lo < s.t < hi
    return True


def _distance(point: OrbitPoint, target: CylinderTarget) -> float:
    if isinstance(point, SkewState):
        return box_distance((point.t,), target)
    return box_distance(point.values, target)


def _hits(point: OrbitPoint, target: CylinderTarget) -> bool:
    if isinstance(point, SkewState):
        return _state_hit(point, target)
    return in_target(point.relation, point.values, point.choices, target)


def orbit_coverage(orbit: Sequence[OrbitPoint], targets: Sequence[CylinderTarget]) -> CoverageReport:
    """First step at which the orbit enters each target"""
    rows = []
    for j, target in enumerate(targets):
        row = CoverageRow(target_id=j)
        for step, point in enumerate(orbit):
            if _hits(point, target):
                row = CoverageRow(target_id=j, hit_step=step, hit_distance=_distance(point, target))
                break
        rows.append(row)
    return CoverageReport(rows=tuple(rows))


def coverage_csv_rows(report: CoverageReport) -> List[List[str]]:
    return [
        [str(row.target_id),
         "" if row.hit_step is None else str(row.hit_step),
         "" if row.hit_distance is None else repr(row.hit_distance)]
        for row in report.rows
    ]
