import numpy as np

from mahavier import relation_catalog, stitch
from maps import catalog
from models import Alphabet, ShiftSide, SkewState, TwoSidedSymbolWindow
from transitivity import (
    auto_boxes, build_sigma_chain, build_transitive_point, first_targets, conjugate_sorting_step,
    skew_inverse_step, skew_step, system_for, verify_sigma_chain, verify_transitive_point
)
from .suites import check

STATES = 1000
TOL = 1e-12


def random_states(alphabet_size: int, rng: np.random.Generator, count: int, lo: int = -8, hi: int = 8):
    for _ in range(count):
        symbols = tuple(int(s) for s in rng.integers(1, alphabet_size + 1, size=hi - lo + 1))
        window = TwoSidedSymbolWindow(alphabet=Alphabet(size=alphabet_size), lo=lo, hi=hi, symbols=symbols)
        yield SkewState(symbols=window, t=float(rng.uniform(0.0, 1.0)))


@check("transitivity", "transitive-point")
def transitive_point(seed: int):
    family = catalog("definicija")
    targets, schedule = first_targets(family.alphabet, 20, 1e-6)
    point = build_transitive_point(family, targets, schedule)
    report = verify_transitive_point(family, point, slack=1e-9)
    hits = sum(row.hit_step is not None for row in report.rows)
    return report.all_hit, f"{hits}/{len(report.rows)} targets, prefix length {len(point.word.prefix)}"


@check("transitivity", "skew-inverse-and-conjugacy")
def skew_inverse_and_conjugacy(seed: int):
    family = catalog("definicija")
    sys = system_for(family, ShiftSide.two_sided)
    rng = np.random.default_rng(seed)
    inverse_failures = conjugacy_failures = 0
    for s in random_states(len(family.maps), rng, STATES):
        back = skew_step(sys, skew_inverse_step(sys, s))
        if back.symbols != s.symbols or abs(back.t - s.t) > TOL:
            inverse_failures += 1
        direct = skew_step(sys, s)
        conjugate = conjugate_sorting_step(family, s)
        if conjugate.symbols != direct.symbols or abs(conjugate.t - direct.t) > TOL:
            conjugacy_failures += 1
    detail = f"{inverse_failures} inverse and {conjugacy_failures} conjugacy failures in {STATES} states"
    return inverse_failures == conjugacy_failures == 0, detail


@check("transitivity", "sigma-chain")
def sigma_chain(seed: int):
    F = relation_catalog("H")
    targets = auto_boxes(F, 10)
    chain = build_sigma_chain(F, targets)
    report = verify_sigma_chain(chain, targets)
    stitched = stitch(chain.points, chain.lengths)
    matched = all(
        stitched.values[s:s + length] == point.values[:length]
        for s, length, point in zip(chain.offsets, chain.lengths, chain.points)
    )
    hits = sum(row.hit_step is not None for row in report.rows)
    return report.all_hit and matched, f"{hits}/{len(targets)} targets, stitched length {len(stitched.values)}"
