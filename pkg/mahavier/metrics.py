from typing import Optional, Sequence, Union

from errors import LengthMismatch, WindowMismatch
from models import MahavierWord, MetricValue, TwoSidedMahavierWindow

Sequenceish = Union[MahavierWord, Sequence[float]]


def _values(x: Sequenceish):
    return x.values if isinstance(x, MahavierWord) else tuple(x)


def metric_dplus(x: Sequenceish, y: Sequenceish, diam: Optional[float] = None) -> MetricValue:
    """Sum over k of |x_k - y_k| / 2^k, with the bound diam * 2^-N on the dropped tail"""
    a, b = _values(x), _values(y)
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)}")
    if diam is None:
        diam = x.relation.diam if isinstance(x, MahavierWord) else 1.0
    value = sum(abs(p - q) / 2.0 ** k for k, (p, q) in enumerate(zip(a, b), start=1))
    return MetricValue(value=value, bound=diam * 2.0 ** (-len(a)))


def metric_d2(x: TwoSidedMahavierWindow, y: TwoSidedMahavierWindow, diam: Optional[float] = None) -> MetricValue:
    """Two-sided sum of |x(k) - y(k)| / 2^|k| over the shared window"""
    if (x.lo, x.hi) != (y.lo, y.hi):
        raise WindowMismatch(f"windows [{x.lo}, {x.hi}] and [{y.lo}, {y.hi}]")
    diam = x.relation.diam if diam is None else diam
    value = sum(
        abs(p - q) / 2.0 ** abs(k)
        for k, p, q in zip(range(x.lo, x.hi + 1), x.values, y.values)
    )
    return MetricValue(value=value, bound=2 * diam * 2.0 ** (-min(-x.lo, x.hi)))
