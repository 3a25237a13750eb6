from typing import Callable, Dict, Sequence, Tuple

from errors import UnknownName
from models import ElementaryExpr, ExprKind, IntervalUnionDomain, MapFamily, Piece, PiecewiseMap

UNIT = ((0.0, 1.0),)
TWO_COMPONENTS = ((0.0, 1.0), (2.0, 3.0))
SYMMETRIC = ((-1.0, 1.0),)


def affine(a: float, b: float) -> ElementaryExpr:
    return ElementaryExpr(kind=ExprKind.affine, a=a, b=b)


def power(p: float) -> ElementaryExpr:
    return ElementaryExpr(kind=ExprKind.power, p=p)


def scaled_power(c: float, p: float, s: float = 0.0) -> ElementaryExpr:
    return ElementaryExpr(kind=ExprKind.scaled_power, c=c, p=p, s=s)


def piecewise(name: str, pieces: Sequence[Tuple[Tuple[float, float], ElementaryExpr]], invertible: bool) -> PiecewiseMap:
    return PiecewiseMap(
        name=name,
        invertible=invertible,
        pieces=tuple(Piece(interval=interval, expr=expr) for interval, expr in pieces)
    )


def family(name: str, domain, maps: Sequence[PiecewiseMap]) -> MapFamily:
    return MapFamily(name=name, domain=IntervalUnionDomain(intervals=domain), maps=tuple(maps))


def definicija() -> MapFamily:
    return family("definicija", UNIT, [
        piecewise("sqrt", [((0.0, 1.0), power(0.5))], True),
        piecewise("half-or-double", [((0.0, 2 / 3), affine(0.5, 0.0)), ((2 / 3, 1.0), affine(2.0, -1.0))], True),
        piecewise("square", [((0.0, 1.0), power(2.0))], True),
    ])


def suspension_g() -> MapFamily:
    return family("suspension-G", UNIT, [
        piecewise("square", [((0.0, 1.0), power(2.0))], True),
        piecewise("cube-root", [((0.0, 1.0), power(1 / 3))], True),
    ])


def exx1() -> MapFamily:
    # branches live on [0, 1] only; [2, 3] carries no relation
    return family("exx1", TWO_COMPONENTS, [
        piecewise("square", [((0.0, 1.0), power(2.0))], True),
        piecewise("cube-root", [((0.0, 1.0), power(1 / 3))], True),
    ])


def exx2() -> MapFamily:
    return family("exx2", TWO_COMPONENTS, [
        piecewise("square-or-cube-root", [((0.0, 1.0), power(2.0)), ((2.0, 3.0), scaled_power(1.0, 1 / 3, 2.0))], True),
        piecewise("swap", [((0.0, 1.0), affine(1.0, 2.0)), ((2.0, 3.0), affine(1.0, -2.0))], True),
    ])


def exx3() -> MapFamily:
    return family("exx3", SYMMETRIC, [
        piecewise("negate", [((-1.0, 1.0), affine(-1.0, 0.0))], True),
        piecewise("cube-root-or-square", [((-1.0, 0.0), power(1 / 3)), ((0.0, 1.0), power(2.0))], True),
    ])


def relation_h() -> MapFamily:
    # f0 is not onto [0, 1]
    return family("H", UNIT, [
        piecewise("half-cube", [((0.0, 1.0), scaled_power(0.5, 3.0))], False),
        piecewise("sqrt", [((0.0, 1.0), power(0.5))], True),
    ])


def tent() -> MapFamily:
    return family("tent", UNIT, [
        piecewise("tent", [((0.0, 0.5), affine(2.0, 0.0)), ((0.5, 1.0), affine(-2.0, 2.0))], False),
    ])


def tent_inverse() -> MapFamily:
    return family("tent-inverse", UNIT, [
        piecewise("half", [((0.0, 1.0), affine(0.5, 0.0))], False),
        piecewise("one-minus-half", [((0.0, 1.0), affine(-0.5, 1.0))], False),
    ])


CATALOG: Dict[str, Callable[[], MapFamily]] = {
    "definicija": definicija,
    "exx1": exx1,
    "exx2": exx2,
    "exx3": exx3,
    "H": relation_h,
    "tent": tent,
    "tent-inverse": tent_inverse,
    "suspension-G": suspension_g,
}


def catalog(name: str) -> MapFamily:
    """Reserved family by name"""
    if name not in CATALOG:
        raise UnknownName(f"Unknown catalog name '{name}'; known: {', '.join(sorted(CATALOG))}")
    return CATALOG[name]()
