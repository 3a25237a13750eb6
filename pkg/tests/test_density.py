import math

import pytest
from hypothesis import given, settings, strategies as st

from density import (
    F0, LOG2, THETA, continued_fraction_coeffs, convergents, exhaustive_gabi, exhaustive_half_pow,
    exhaustive_pow23, gabi_log, gabi_log_magnitude, pair_log, property_l_block, residual, search_gabi, search_half_pow,
    search_pow23, search_propertyL, steering_candidates
)
from errors import NotApplicable, OutOfRange, WitnessNotFound
from maps import catalog, compose_runs_log, safe_exp
from models import LemmaName


def pow23_value(x, m, n):
    return x ** (2.0 ** m / 3.0 ** n)


class TestConvergents:
    def test_coefficients_of_exact_fractions(self):
        assert list(continued_fraction_coeffs(1.5)) == [1, 2]
        assert list(continued_fraction_coeffs(2.25)) == [2, 4]

    def test_log_ratio_convergents(self):
        assert convergents(THETA)[:6] == [(1, 1), (2, 1), (3, 2), (8, 5), (19, 12), (65, 41)]

    def test_residual_shrinks_along_convergents(self):
        assert abs(residual(12)) < abs(residual(5)) < abs(residual(2))


class TestPow23:
    def test_exact_member(self):
        w = search_pow23(0.5, 0.5 ** (2 / 3), 1e-12)
        assert w.exponents == {"m": 1, "n": 1}

    def test_quarter(self):
        w = search_pow23(0.5, 0.25, 0.01)
        assert w.lemma == LemmaName.pow23
        assert w.exponents == {"m": 20, "n": 12}
        assert w.error < 0.01
        assert pow23_value(0.5, w.exponents["m"], w.exponents["n"]) == pytest.approx(w.achieved)

    def test_bound_exhausted(self):
        with pytest.raises(WitnessNotFound) as exc:
            search_pow23(0.5, 0.25, 1e-15, bound=4)
        assert exc.value.bound == 4
        assert exc.value.best_error > 0

    @pytest.mark.parametrize("x", [0.0, 1.0])
    def test_x_must_be_interior(self, x):
        with pytest.raises(OutOfRange):
            search_pow23(x, 0.5, 0.01)

    def test_bad_eps(self):
        with pytest.raises(OutOfRange):
            search_pow23(0.5, 0.5, 0.0)

    def test_steered_witness_after_linear_scan(self):
        oracle = exhaustive_pow23(0.5, 0.25, 0.01, 64)
        steered = search_pow23(0.5, 0.25, 0.01, bound=400, linear_scan_limit=2)
        assert steered.error < 0.01
        assert steered.exponents["n"] >= oracle.exponents["n"]
        m, n = steered.exponents["m"], steered.exponents["n"]
        assert pow23_value(0.5, m, n) == pytest.approx(steered.achieved)

    def test_fast_path_matches_oracle_order(self):
        fast = search_pow23(0.3, 0.7, 0.01)
        oracle = exhaustive_pow23(0.3, 0.7, 0.01, 64)
        assert fast.exponents["n"] == oracle.exponents["n"]
        assert fast.error < 0.01 and oracle.error < 0.01


class TestHalfPow:
    def test_exact_half(self):
        w = search_half_pow(0.5, 0.5, 1e-9)
        assert w.exponents == {"k": 1, "n": 1}
        assert w.achieved == pytest.approx(0.5)

    def test_zero_target(self):
        w = search_half_pow(0.5, 0.0, 0.125)
        assert w.exponents == {"k": 24, "n": 3}

    def test_generic(self):
        w = search_half_pow(0.6, 0.3, 1e-3)
        assert w.error < 1e-3

    def test_oracle_agrees(self):
        oracle = exhaustive_half_pow(0.6, 0.3, 1e-3, 20, 2 ** 12)
        assert oracle.error < 1e-3

    def test_x_range(self):
        with pytest.raises(OutOfRange):
            search_half_pow(0.9, 0.3, 1e-3)


class TestPropertyL:
    @pytest.mark.parametrize("x, z, eps", [(0.5, 0.5, 1e-6), (0.9, 0.1, 1e-3), (0.2, 0.95, 1e-2)])
    def test_verified_by_iteration(self, definicija, x, z, eps):
        w = search_propertyL(definicija, x, z, eps)
        e = w.exponents
        value = safe_exp(compose_runs_log(definicija, property_l_block(e["m"], e["k"], e["n"]), math.log(x)))
        assert abs(value - z) < eps

    def test_target_one(self, definicija):
        w = search_propertyL(definicija, 0.4, 1.0, 1e-3)
        assert (w.exponents["m"], w.exponents["k"]) == (1, 1)
        assert w.error < 1e-3

    def test_block_runs(self):
        assert property_l_block(2, 5, 3) == [(3, 2), (2, 5), (1, 5)]

    def test_needs_three_maps(self, h_family):
        with pytest.raises(NotApplicable):
            search_propertyL(h_family, 0.5, 0.5, 1e-3)


class TestGabi:
    def test_exact_identity(self):
        w = search_gabi(1.0, 0.5, 1e-9)
        assert w.exponents == {"k": 2, "h": 2}

    def test_approaches_one(self):
        w = search_gabi(1.0, 1.0, 1e-3)
        assert w.exponents["h"] == 1
        assert w.achieved == pytest.approx(1.0, abs=1e-3)

    def test_log_space_reevaluation(self):
        w = search_gabi(0.7, 0.2, 1e-3)
        value = safe_exp(gabi_log(math.log(0.7), w.exponents["h"], w.exponents["k"]))
        assert abs(value - 0.2) < 1e-3

    def test_oracle_agrees(self):
        oracle = exhaustive_gabi(0.7, 0.2, 1e-3, 80, 2 ** 12)
        assert oracle.error < 1e-3
        assert oracle.exponents["h"] == search_gabi(0.7, 0.2, 1e-3).exponents["h"] == 67

    def test_matches_direct_iteration(self, h_family):
        # f1^k(f0^h(x)) for small exponents
        x, h, k = 0.9, 2, 3
        direct = x
        for _ in range(h):
            direct = h_family.map(1).value(direct)
        for _ in range(k):
            direct = h_family.map(2).value(direct)
        assert safe_exp(gabi_log(math.log(x), h, k)) == pytest.approx(direct)

    @pytest.mark.parametrize("h", range(1, 7))
    def test_closed_form_grid(self, h_family, h):
        for t in [i / 10 for i in range(1, 10)]:
            if gabi_log_magnitude(math.log(t), h) > math.log(700):
                # f0^h(t) underflows in binary64
                continue
            direct = t
            for _ in range(h):
                direct = h_family.map(1).value(direct)
            for k in range(1, 7):
                direct = h_family.map(2).value(direct)
                assert safe_exp(gabi_log(math.log(t), h, k)) == pytest.approx(direct, abs=1e-9)

    @given(x=st.floats(min_value=0.05, max_value=1.0), z=st.floats(min_value=0.05, max_value=0.95))
    @settings(max_examples=25, deadline=None)
    def test_always_found(self, x, z):
        assert search_gabi(x, z, 1e-3).error < 1e-3


class TestSteering:
    def test_pair_log_single_step(self):
        assert pair_log(0.0, 1, 0) == pytest.approx(-LOG2)

    def test_shortest_exact_word_first(self):
        best = steering_candidates(-LOG2, 5)[0]
        assert best.runs == ((F0, 1),)
        assert best.log_value == pytest.approx(-LOG2)
