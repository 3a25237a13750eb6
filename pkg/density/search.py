import logging
import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from config import settings
from errors import NotApplicable, OutOfRange, WitnessNotFound
from maps import compose_runs_log, safe_exp
from models import DensityWitness, LemmaName, MapFamily
from .convergents import LOG2, LOG3, THETA, convergents, residual

logger = logging.getLogger(__name__)

TWO_THIRDS = 2.0 / 3.0
# 2^n stays finite in binary64 well past this
MAX_DYADIC_EXPONENT = 1000


class _Scan:
    """Tracks evaluations and the best error of one search"""

    def __init__(self, lemma: LemmaName, z: float, eps: float):
        self.lemma = lemma
        self.z = z
        self.eps = eps
        self.evaluations = 0
        self.best_error = math.inf

    def offer(self, exponents: Dict[str, int], log_value: float) -> Optional[DensityWitness]:
        self.evaluations += 1
        achieved = safe_exp(log_value)
        error = abs(achieved - self.z)
        if error < self.best_error:
            self.best_error = error
        if error < self.eps:
            return DensityWitness(
                lemma=self.lemma,
                exponents=exponents,
                achieved=achieved,
                target=self.z,
                eps=self.eps,
                error=error,
                evaluations=self.evaluations
            )
        return None

    def fail(self, bound: int):
        logger.info(f"{self.lemma.value}: no witness within bound {bound}, best error {self.best_error:.3g}")
        raise WitnessNotFound(bound, self.best_error)


def _first_accepted(scan: _Scan, offers) -> Optional[DensityWitness]:
    """First candidate that also passes the scalar re-evaluation"""
    for exponents, log_value in offers:
        found = scan.offer(exponents, log_value)
        if found:
            return found
    return None


def _check_eps(eps: float):
    if not eps > 0:
        raise OutOfRange(f"eps must be positive, got {eps}")


def _check_unit(name: str, value: float, lo: float, hi: float, open_lo: bool = False, open_hi: bool = False):
    below = value <= lo if open_lo else value < lo
    above = value >= hi if open_hi else value > hi
    if below or above:
        raise OutOfRange(f"{name}={value} outside {'(' if open_lo else '['}{lo}, {hi}{')' if open_hi else ']'}")


def target_log(z: float, eps: float) -> float:
    """ln of the point aimed at; the endpoints 0 and 1 are approached from inside"""
    half = min(eps, 1.0) / 2
    if z <= 0:
        return math.log(half)
    if z >= 1:
        return math.log1p(-half)
    return math.log(z)


def _int_candidates(center: float, lo: int, hi: Optional[int] = None) -> List[int]:
    out = []
    for c in (math.floor(center), math.ceil(center)):
        c = max(int(c), lo)
        if hi is not None:
            c = min(c, hi)
        if c not in out:
            out.append(c)
    return out


def _log_of_negative(log_value: float) -> float:
    return math.log(-log_value)


def _neg_exp(exponent: float) -> float:
    """-e^exponent, saturating to -inf"""
    try:
        return -math.exp(exponent)
    except OverflowError:
        return -math.inf


# x^(2^m / 3^n)

def _pow23_log(log_x: float, m: int, n: int) -> float:
    return _neg_exp(m * LOG2 - n * LOG3 + _log_of_negative(log_x))


def search_pow23(x: float, z: float, eps: float, bound: Optional[int] = None,
                 linear_scan_limit: Optional[int] = None) -> DensityWitness:
    """First (m, n), n ascending, with |x^(2^m/3^n) - z| < eps"""
    _check_unit("x", x, 0.0, 1.0, open_lo=True, open_hi=True)
    return search_pow23_log(math.log(x), z, eps, bound, linear_scan_limit)


def search_pow23_log(log_x: float, z: float, eps: float, bound: Optional[int] = None,
                     linear_scan_limit: Optional[int] = None) -> DensityWitness:
    _check_unit("z", z, 0.0, 1.0)
    _check_eps(eps)
    if not log_x < 0:
        raise OutOfRange("x must lie in (0, 1)")
    bound = settings.default_bound if bound is None else bound
    limit = settings.linear_scan_limit if linear_scan_limit is None else linear_scan_limit
    scan = _Scan(LemmaName.pow23, z, eps)
    # continuous optimum m*(n) = offset + n * ln3/ln2
    offset = (_log_of_negative(target_log(z, eps)) - _log_of_negative(log_x)) / LOG2

    def try_n(n: int) -> Optional[DensityWitness]:
        for m in _int_candidates(offset + n * THETA, 1, bound):
            found = scan.offer({"m": m, "n": n}, _pow23_log(log_x, m, n))
            if found:
                return found
        return None

    for n in range(1, min(bound, limit) + 1):
        found = try_n(n)
        if found:
            return found

    if bound > limit:
        found = _steer(try_n, offset, limit, bound)
        if found:
            return found
    scan.fail(bound)


def _steer(try_n: Callable[[int], Optional[DensityWitness]], offset: float, start: int, bound: int):
    """Jump n by convergent denominators of ln3/ln2, each time to the smallest distance from an integer m"""
    steps = sorted({q for _, q in convergents()})
    n = start
    while True:
        r = residual(1, offset + n * THETA)
        usable = [q for q in steps if q <= max(n, 1)]
        q = min(usable, key=lambda q: abs(residual(1, r + residual(q))))
        n += q
        if n > bound:
            return None
        found = try_n(n)
        if found:
            return found


def exhaustive_pow23(x: float, z: float, eps: float, bound: int) -> DensityWitness:
    """Oracle: n outer, m inner, both in 1..bound"""
    _check_unit("x", x, 0.0, 1.0, open_lo=True, open_hi=True)
    _check_unit("z", z, 0.0, 1.0)
    _check_eps(eps)
    scan = _Scan(LemmaName.pow23, z, eps)
    ms = np.arange(1, bound + 1)
    base = math.log(-math.log(x))
    with np.errstate(over="ignore", under="ignore"):
        for n in range(1, bound + 1):
            values = np.exp(-np.exp(ms * LOG2 - n * LOG3 + base))
            errors = np.abs(values - z)
            scan.evaluations += len(ms)
            hits = np.flatnonzero(errors < eps)
            scan.best_error = min(scan.best_error, float(errors.min()))
            found = _first_accepted(scan, (({"m": int(ms[i]), "n": n}, _pow23_log(math.log(x), int(ms[i]), n)) for i in hits))
            if found:
                return found
    scan.fail(bound)


# (1/2)^(k/2^n) * x^(1/2^n), optionally pushed forward by further square roots

def _half_pow_scan(lemma: LemmaName, log_x: float, z: float, eps: float, bound: int,
                   push: int = 0, k_bound: Optional[int] = None,
                   exponents: Callable[[int, int], Dict[str, int]] = lambda k, n: {"k": k, "n": n}) -> DensityWitness:
    scan = _Scan(lemma, z, eps)
    log_t = target_log(z, eps)
    for n in range(1, min(bound, MAX_DYADIC_EXPONENT - push) + 1):
        scale = 2.0 ** (n + push)
        if z == 0 and push == 0:
            # (1/2)^(k/2^n) <= 2^-n
            k = n * 2 ** n
            if k_bound is not None and k > k_bound:
                break
            candidates = [k]
        else:
            candidates = _int_candidates((log_x - scale * log_t) / LOG2, 1, k_bound)
        for k in candidates:
            found = scan.offer(exponents(k, n), (log_x - k * LOG2) / scale)
            if found:
                return found
    scan.fail(bound)


def search_half_pow(x: float, z: float, eps: float, bound: Optional[int] = None,
                    k_bound: Optional[int] = None) -> DensityWitness:
    """First (k, n), n ascending, with |(1/2)^(k/2^n) x^(1/2^n) - z| < eps"""
    _check_unit("x", x, 0.0, TWO_THIRDS, open_lo=True)
    return search_half_pow_log(math.log(x), z, eps, bound, k_bound)


def search_half_pow_log(log_x: float, z: float, eps: float, bound: Optional[int] = None,
                        k_bound: Optional[int] = None) -> DensityWitness:
    _check_unit("z", z, 0.0, TWO_THIRDS)
    _check_eps(eps)
    bound = settings.default_bound if bound is None else bound
    return _half_pow_scan(LemmaName.half_pow, log_x, z, eps, bound, k_bound=k_bound)


def exhaustive_half_pow(x: float, z: float, eps: float, n_bound: int, k_bound: int) -> DensityWitness:
    """Oracle: n outer, k inner"""
    _check_unit("x", x, 0.0, TWO_THIRDS, open_lo=True)
    _check_unit("z", z, 0.0, TWO_THIRDS)
    _check_eps(eps)
    scan = _Scan(LemmaName.half_pow, z, eps)
    ks = np.arange(1, k_bound + 1, dtype=float)
    log_x = math.log(x)
    with np.errstate(under="ignore"):
        for n in range(1, min(n_bound, MAX_DYADIC_EXPONENT) + 1):
            errors = np.abs(np.exp((log_x - ks * LOG2) / 2.0 ** n) - z)
            scan.evaluations += len(ks)
            scan.best_error = min(scan.best_error, float(errors.min()))
            hits = np.flatnonzero(errors < eps)
            found = _first_accepted(scan, (({"k": int(ks[i]), "n": n}, (log_x - int(ks[i]) * LOG2) / 2.0 ** n) for i in hits))
            if found:
                return found
    scan.fail(n_bound)


# f1^(m+n) o f2^k o f3^m for the definicija triple

def property_l_block(m: int, k: int, n: int) -> List[Tuple[int, int]]:
    """Symbol runs of the word applying f3^m, then f2^k, then f1^(m+n)"""
    return [(3, m), (2, k), (1, m + n)]


def _check_triple(family: MapFamily):
    if len(family.maps) != 3:
        raise NotApplicable(f"property L needs three maps, {family.name or 'family'} has {len(family.maps)}")


def search_propertyL(family: MapFamily, x: float, z: float, eps: float,
                     bound: Optional[int] = None) -> DensityWitness:
    """(k, m, n) with |f1^(m+n)(f2^k(f3^m(x))) - z| < eps"""
    _check_unit("x", x, 0.0, 1.0, open_lo=True, open_hi=True)
    return search_propertyL_log(family, math.log(x), z, eps, bound)


def search_propertyL_log(family: MapFamily, log_x: float, z: float, eps: float,
                         bound: Optional[int] = None) -> DensityWitness:
    _check_triple(family)
    _check_unit("z", z, 0.0, 1.0)
    _check_eps(eps)
    if not log_x < 0:
        raise OutOfRange("x must lie in (0, 1)")
    bound = settings.default_bound if bound is None else bound

    if z == 1:
        return _rescore(family, log_x, _propertyL_top(family, log_x, eps, bound), z, eps)

    # smallest m pushing both x and z below 2/3 under squaring
    log_two_thirds = math.log(TWO_THIRDS)
    log_z = math.log(z) if z > 0 else -math.inf
    m = 1
    while 2.0 ** m * log_x >= log_two_thirds or 2.0 ** m * log_z >= log_two_thirds:
        m += 1
    log_xm = compose_runs_log(family, [(3, m)], log_x)
    logger.debug(f"propertyL: m={m}, ln f3^m(x)={log_xm:.6g}")
    found = _half_pow_scan(
        LemmaName.property_l, log_xm, z, eps, bound, push=m,
        exponents=lambda k, n: {"k": k, "m": m, "n": n}
    )
    return _rescore(family, log_x, found, z, eps)


def _propertyL_top(family: MapFamily, log_x: float, eps: float, bound: int) -> DensityWitness:
    """m = k = 1, then square roots until within eps of 1"""
    log_y = compose_runs_log(family, [(3, 1), (2, 1)], log_x)
    scan = _Scan(LemmaName.property_l, 1.0, eps)
    for n in range(1, min(bound, MAX_DYADIC_EXPONENT) + 1):
        found = scan.offer({"k": 1, "m": 1, "n": n}, log_y / 2.0 ** (n + 1))
        if found:
            return found
    scan.fail(bound)


def _rescore(family: MapFamily, log_x: float, witness: DensityWitness, z: float, eps: float) -> DensityWitness:
    """Re-evaluate the witness by iterating the family and score it against z"""
    e = witness.exponents
    log_value = compose_runs_log(family, property_l_block(e["m"], e["k"], e["n"]), log_x)
    achieved = safe_exp(log_value)
    error = abs(achieved - z)
    if not error < eps:
        raise WitnessNotFound(0, error, f"propertyL witness {e} misses {z} by {error:.3g} on iteration")
    return witness.model_copy(update={"achieved": achieved, "target": z, "eps": eps, "error": error})


# (1/2)^((3^h - 1)/2^(k+1)) * x^(3^h/2^k) = f1^k(f0^h(x)) on the relation H

def gabi_log_magnitude(log_x: float, h: int) -> float:
    """ln |ln value| at k = 0"""
    return h * LOG3 + math.log(LOG2 / 2 * -math.expm1(-h * LOG3) - log_x)


def gabi_log(log_x: float, h: int, k: int) -> float:
    return _neg_exp(gabi_log_magnitude(log_x, h) - k * LOG2)


def search_gabi(x: float, z: float, eps: float, bound: Optional[int] = None,
                h_cap: Optional[int] = None) -> DensityWitness:
    """First (k, h), h ascending, with |f1^k(f0^h(x)) - z| < eps"""
    _check_unit("x", x, 0.0, 1.0, open_lo=True)
    return search_gabi_log(math.log(x), z, eps, bound, h_cap)


def search_gabi_log(log_x: float, z: float, eps: float, bound: Optional[int] = None,
                    h_cap: Optional[int] = None) -> DensityWitness:
    _check_unit("z", z, 0.0, 1.0)
    _check_eps(eps)
    if log_x > 0:
        raise OutOfRange("x must lie in (0, 1]")
    bound = settings.default_bound if bound is None else bound
    h_cap = settings.gabi_h_cap if h_cap is None else h_cap
    scan = _Scan(LemmaName.gabi, z, eps)
    log_gap = _log_of_negative(target_log(z, eps))
    for h in range(1, min(bound, h_cap) + 1):
        magnitude = gabi_log_magnitude(log_x, h)
        for k in _int_candidates((magnitude - log_gap) / LOG2, 1, bound):
            found = scan.offer({"k": k, "h": h}, gabi_log(log_x, h, k))
            if found:
                return found
    scan.fail(min(bound, h_cap))


def exhaustive_gabi(x: float, z: float, eps: float, h_bound: int, k_bound: int) -> DensityWitness:
    """Oracle: h outer, k inner, all in log space"""
    _check_unit("x", x, 0.0, 1.0, open_lo=True)
    _check_unit("z", z, 0.0, 1.0)
    _check_eps(eps)
    scan = _Scan(LemmaName.gabi, z, eps)
    log_x = math.log(x)
    ks = np.arange(1, k_bound + 1, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        for h in range(1, min(h_bound, settings.gabi_h_cap) + 1):
            values = np.exp(-np.exp(gabi_log_magnitude(log_x, h) - ks * LOG2))
            errors = np.abs(values - z)
            scan.evaluations += len(ks)
            scan.best_error = min(scan.best_error, float(errors.min()))
            hits = np.flatnonzero(errors < eps)
            found = _first_accepted(scan, (({"k": int(ks[i]), "h": h}, gabi_log(log_x, h, int(ks[i]))) for i in hits))
            if found:
                return found
    scan.fail(h_bound)


SEARCHES: Dict[LemmaName, Callable[..., DensityWitness]] = {
    LemmaName.pow23: search_pow23,
    LemmaName.half_pow: search_half_pow,
    LemmaName.property_l: search_propertyL,
    LemmaName.gabi: search_gabi,
}
