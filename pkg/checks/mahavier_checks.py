import numpy as np

from mahavier import (
    enumerate_mahavier, forward_impression_sample, impression_coverage, interleave_T, interleave_hypothesis,
    random_window, relation_catalog, truncate
)
from .suites import check


@check("mahavier", "enumerate-depth-12")
def enumerate_depth_12(seed: int):
    F = relation_catalog("H")
    words = enumerate_mahavier(F, 1.0, 12)
    shorter = {(w.values, w.choices) for w in enumerate_mahavier(F, 1.0, 11)}
    consistent = all(
        (p.values, p.choices) in shorter for p in (truncate(w, 11) for w in words)
    )
    return len(words) == 2 ** 12 and consistent, f"{len(words)} words, prefixes consistent: {consistent}"


@check("mahavier", "interleave-exx3")
def interleave_exx3(seed: int):
    F = relation_catalog("exx3")
    report = interleave_hypothesis(F)
    hypothesis = report.holds and len(report.roots) == 1 and abs(report.roots[0]) < 1e-9
    rng = np.random.default_rng(seed)
    outputs = {interleave_T(random_window(F, rng, -8, 8)).values for _ in range(1000)}
    detail = f"roots {list(report.roots)}, {len(outputs)} distinct outputs of 1000"
    return hypothesis and len(outputs) == 1000, detail


@check("mahavier", "impression-exx1")
def impression_exx1(seed: int):
    F = relation_catalog("exx1")
    samples = forward_impression_sample(F, 0.5, 30, 10_000, seed=seed)
    coverage = impression_coverage(samples, 0.0, 1.0, 0.01)
    return coverage >= 0.95, f"coverage {coverage:.3f}"
