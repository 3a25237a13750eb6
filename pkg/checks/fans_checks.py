import numpy as np

from config import settings
from errors import WitnessNotFound
from fans import lelek_endpoint_near, random_lelek_window, render_cantor, render_lelek, sample_lelek_legs
from mahavier import metric_d2
from .suites import check

EPS = 0.05


@check("fans", "lelek-endpoints")
def lelek_endpoints(seed: int):
    rng = np.random.default_rng(seed)
    misses, worst = 0, 0.0
    for _ in range(100):
        x = random_lelek_window(rng, -32, 32)
        try:
            e, certificate = lelek_endpoint_near(x, EPS)
        except WitnessNotFound:
            misses += 1
            continue
        distance = metric_d2(x.window, e.window).value
        worst = max(worst, distance)
        if abs(e.window.value_at(certificate.index) - 1.0) > settings.identity_tolerance or not distance < EPS:
            misses += 1
    return misses == 0, f"{100 - misses}/100 endpoints, worst distance {worst:.3g}"


@check("fans", "render-determinism")
def render_determinism(seed: int):
    depth = 6
    cantor = render_cantor(depth)
    legs = cantor.count("<polyline")
    lelek = [render_lelek(sample_lelek_legs(np.random.default_rng(seed), 16, 3, -8, 8)) for _ in range(2)]
    same = cantor == render_cantor(depth) and lelek[0] == lelek[1]
    return same and legs == 2 ** depth, f"{legs} Cantor legs, identical reruns: {same}"
