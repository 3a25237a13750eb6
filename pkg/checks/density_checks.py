import math
import time

import numpy as np

from density import LOG2, LOG3, gabi_log, property_l_block, search_gabi, search_pow23, search_propertyL
from errors import WitnessNotFound
from maps import catalog, compose_runs_log, safe_exp
from .suites import check

GRID_X = [round(0.1 * i, 1) for i in range(1, 10)]
GRID_Z = [round(0.05 * i, 2) for i in range(1, 20)]
EPS = 1e-3
BOUND = 2 ** 20
MAX_SECONDS = 1.0


def pow23_value(x: float, m: int, n: int) -> float:
    """x^(2^m / 3^n) through ln(-ln x)"""
    return math.exp(-math.exp(m * LOG2 - n * LOG3 + math.log(-math.log(x))))


@check("density", "pow23-grid")
def pow23_grid(seed: int):
    misses, slowest = [], 0.0
    for x in GRID_X:
        for z in GRID_Z:
            start = time.perf_counter()
            try:
                w = search_pow23(x, z, EPS, BOUND)
            except WitnessNotFound:
                misses.append((x, z))
                continue
            slowest = max(slowest, time.perf_counter() - start)
            if not abs(pow23_value(x, w.exponents["m"], w.exponents["n"]) - z) < EPS:
                misses.append((x, z))
    total = len(GRID_X) * len(GRID_Z)
    detail = f"{total - len(misses)}/{total} witnesses, slowest query {slowest:.3f}s"
    return not misses and slowest < MAX_SECONDS, detail


@check("density", "gabi-grid")
def gabi_grid(seed: int):
    misses, worst = [], 0.0
    xs = GRID_X + [1.0]
    for x in xs:
        for z in GRID_Z:
            try:
                w = search_gabi(x, z, EPS, BOUND)
            except WitnessNotFound:
                misses.append((x, z))
                continue
            error = abs(safe_exp(gabi_log(math.log(x), w.exponents["h"], w.exponents["k"])) - z)
            worst = max(worst, error)
            if not error < EPS:
                misses.append((x, z))
    total = len(xs) * len(GRID_Z)
    return not misses, f"{total - len(misses)}/{total} witnesses, worst re-evaluated error {worst:.2e}"


@check("density", "propertyL-random")
def property_l_random(seed: int):
    family = catalog("definicija")
    rng = np.random.default_rng(seed)
    eps = 1e-2
    misses = 0
    for _ in range(50):
        x = float(rng.uniform(0.0, 1.0))
        while x == 0.0:
            x = float(rng.uniform(0.0, 1.0))
        z = float(rng.uniform(0.0, 1.0))
        try:
            w = search_propertyL(family, x, z, eps)
        except WitnessNotFound:
            misses += 1
            continue
        e = w.exponents
        value = safe_exp(compose_runs_log(family, property_l_block(e["m"], e["k"], e["n"]), math.log(x)))
        if not abs(value - z) < eps:
            misses += 1
    return misses == 0, f"{50 - misses}/50 witnesses"
