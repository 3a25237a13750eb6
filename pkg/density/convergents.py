'''Continued fraction coefficients and convergents for steering exponent ratios'''

import math
from typing import Generator, Iterator, List, Tuple

EPS = 1e-12

LOG2 = math.log(2.0)
LOG3 = math.log(3.0)
# irrational slope behind every density search: 3^n against 2^m
THETA = LOG3 / LOG2


def continued_fraction_coeffs(x: float, eps: float = EPS, max_terms: int = 32) -> Generator[int, None, None]:
    '''Euclidean algorithm on a real number; stops once the remainder vanishes or doubles run out'''
    for _ in range(max_terms):
        n, rem = divmod(x, 1)
        yield int(n)
        if rem < eps:
            break
        x = 1 / rem


def continuants(coeffs: Iterator[int]) -> Generator[Tuple[int, int], None, None]:
    '''Fold coefficients into successive convergents p/q'''
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in coeffs:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def convergents(x: float = THETA, max_denominator: int = 10 ** 12) -> List[Tuple[int, int]]:
    out = []
    for p, q in continuants(continued_fraction_coeffs(x)):
        if q > max_denominator:
            break
        out.append((p, q))
    return out


def residual(q: int, x: float = THETA) -> float:
    '''Signed q*x - p for the nearest integer p'''
    v = q * x
    return v - round(v)
