import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from errors import (
    BudgetExceeded, LengthMismatch, NotApplicable, OutOfDomain, SeamViolation, TooShort, WindowMismatch,
    WindowTooShort
)
from mahavier import (
    conjugacy_S, csv_header, csv_row, enumerate_mahavier, forward_impression_sample, impression_coverage,
    interleave_order, interleave_T, inverse_relation_word, interleave_hypothesis, metric_d2, metric_dplus,
    phi_pair_to_window, exx2_apex_fiber, random_window, relation_catalog, shift_forward_truncated,
    shift_two_sided_window, split_S, stitch, successors, truncate
)
from models import Alphabet, Direction, FiniteWord, MahavierWord, OneSidedWord, TwoSidedMahavierWindow


def h_word(F, values, choices, direction=Direction.forward):
    return MahavierWord(relation=F, values=tuple(values), choices=tuple(choices), direction=direction)


def h_window(F, lo, values, choices):
    return TwoSidedMahavierWindow(relation=F, lo=lo, hi=lo + len(values) - 1, values=tuple(values), choices=tuple(choices))


class TestSuccessors:
    def test_h_at_one(self, relation_h):
        assert successors(relation_h, 1.0) == [(1, pytest.approx(0.5)), (2, pytest.approx(1.0))]

    def test_exx1_at_point_three(self):
        out = successors(relation_catalog("exx1"), 0.3)
        assert [k for k, _ in out] == [1, 2]
        assert out[0][1] == pytest.approx(0.09)
        assert out[1][1] == pytest.approx(0.3 ** (1 / 3))

    def test_agreeing_branches_collapse(self, relation_h):
        assert successors(relation_h, 0.0) == [(1, 0.0)]

    def test_outside_domain(self, relation_h):
        with pytest.raises(OutOfDomain):
            successors(relation_h, 7.0)


class TestEnumerate:
    def test_h_depth_two(self, relation_h):
        words = enumerate_mahavier(relation_h, 1.0, 2)
        assert [w.choices for w in words] == [(1, 1), (1, 2), (2, 1), (2, 2)]
        expected = [(1, 0.5, 0.0625), (1, 0.5, math.sqrt(0.5)), (1, 1, 0.5), (1, 1, 1)]
        for w, values in zip(words, expected):
            assert w.values == pytest.approx(values)

    def test_depth_one_is_successors(self, relation_h):
        words = enumerate_mahavier(relation_h, 0.4, 1)
        assert [(w.choices[0], w.values[1]) for w in words] == successors(relation_h, 0.4)

    def test_zero_is_fixed(self, relation_h):
        words = enumerate_mahavier(relation_h, 0.0, 5)
        assert len(words) == 1
        assert words[0].values == (0.0,) * 6

    def test_budget(self, relation_h):
        with pytest.raises(BudgetExceeded):
            enumerate_mahavier(relation_h, 1.0, 25)

    def test_start_outside_domain(self, relation_h):
        with pytest.raises(OutOfDomain):
            enumerate_mahavier(relation_h, 7.0, 2)

    def test_prefix_consistency(self, relation_h):
        deep = enumerate_mahavier(relation_h, 1.0, 6)
        shallow = {(w.values, w.choices) for w in enumerate_mahavier(relation_h, 1.0, 5)}
        assert len(deep) == 64
        assert all((truncate(w, 5).values, truncate(w, 5).choices) in shallow for w in deep)


class TestMahavierWord:
    def test_rejects_pair_off_the_relation(self, relation_h):
        with pytest.raises(ValidationError):
            h_word(relation_h, (1.0, 0.3), (1,))

    def test_rejects_missing_choice(self, relation_h):
        with pytest.raises(ValidationError):
            h_word(relation_h, (1.0, 0.5), ())

    def test_backward_word(self, relation_h):
        w = inverse_relation_word(relation_h, (0.5, 1.0), (1,))
        assert w.direction == Direction.backward


class TestShifts:
    def test_forward_truncated(self, relation_h):
        w = shift_forward_truncated(h_word(relation_h, (1.0, 0.5, 0.0625), (1, 1)))
        assert w.values == (0.5, 0.0625)
        assert w.choices == (1,)

    def test_forward_truncated_to_single_value(self, relation_h):
        w = shift_forward_truncated(h_word(relation_h, (1.0, 0.5), (1,)))
        assert w.values == (0.5,)
        with pytest.raises(TooShort):
            shift_forward_truncated(w)

    def test_two_sided_round_trip(self, relation_h):
        w = h_window(relation_h, -1, (1.0, 1.0, 0.5, 0.0625), (2, 1, 1))
        shifted = shift_two_sided_window(w, "forward")
        assert (shifted.lo, shifted.hi) == (-2, 1)
        assert shift_two_sided_window(shifted, "backward") == w

    def test_two_sided_too_short(self, relation_h):
        with pytest.raises(WindowTooShort):
            shift_two_sided_window(h_window(relation_h, 0, (1.0, 1.0), (2,)), "forward")


class TestStitch:
    def test_joins_on_shared_value(self, relation_h):
        a = h_word(relation_h, (1.0, 0.5), (1,))
        b = h_word(relation_h, (0.5, 0.0625), (1,))
        w = stitch([a, b])
        assert w.values == (1.0, 0.5, 0.0625)
        assert w.choices == (1, 1)

    def test_mismatch(self, relation_h):
        a = h_word(relation_h, (1.0, 1.0), (2,))
        b = h_word(relation_h, (0.5, 0.0625), (1,))
        with pytest.raises(ValueError):
            stitch([a, b])


class TestImpression:
    def test_zero_stays_put(self, relation_h):
        assert set(forward_impression_sample(relation_h, 0.0, 3, 100)) == {0.0}

    def test_sampled_values_are_seeded(self):
        F = relation_catalog("exx1")
        assert forward_impression_sample(F, 0.5, 30, 500, seed=3) == forward_impression_sample(F, 0.5, 30, 500, seed=3)

    def test_full_coverage(self):
        assert impression_coverage(np.linspace(0.0, 1.0, 101)) == pytest.approx(1.0)

    def test_single_sample(self):
        assert impression_coverage([0.5]) == pytest.approx(3 / 101)

    def test_empty(self):
        assert impression_coverage([]) == 0.0


class TestInterleave:
    def test_order(self):
        assert interleave_order(-2, 2) == [0, -1, 1, -2]

    def test_constant_zero(self, exx3):
        w = h_window(exx3, -2, (0.0,) * 5, (1,) * 4)
        assert interleave_T(w).values == (0.0,) * 4

    def test_generic_window(self, exx3, rng):
        out = interleave_T(random_window(exx3, rng, -2, 2))
        assert len(out.values) == 4

    def test_distinct_inputs_distinct_outputs(self, exx3, rng):
        outputs = {interleave_T(random_window(exx3, rng, -4, 4)).values for _ in range(50)}
        assert len(outputs) == 50

    def test_hypothesis_fails_for_h(self, relation_h):
        w = h_window(relation_h, -1, (0.0, 0.0, 0.0), (1, 1))
        with pytest.raises(NotApplicable):
            interleave_T(w)

    def test_exx3_hypothesis(self, exx3):
        report = interleave_hypothesis(exx3)
        assert report.holds
        assert report.roots == (pytest.approx(0.0, abs=1e-9),)


class TestPhi:
    def test_constant_one(self, relation_h):
        a = h_word(relation_h, (1.0, 1.0, 1.0), (2, 2))
        b = inverse_relation_word(relation_h, (1.0, 1.0), (2,))
        w = phi_pair_to_window(a, b)
        assert (w.lo, w.hi) == (-1, 3)
        assert w.values == (1.0,) * 5

    def test_half_cube_seam(self, relation_h):
        a = h_word(relation_h, (0.5, 0.0625), (1,))
        b = inverse_relation_word(relation_h, (1.0,), ())
        w = phi_pair_to_window(a, b)
        assert w.choice_at(0) == 1

    def test_seam_violation(self, relation_h):
        a = h_word(relation_h, (0.2,), ())
        b = inverse_relation_word(relation_h, (1.0,), ())
        with pytest.raises(SeamViolation):
            phi_pair_to_window(a, b)


class TestConjugacyS:
    def test_window_layout(self):
        A2 = Alphabet(size=2)
        a = OneSidedWord(prefix=FiniteWord(alphabet=A2), tail_symbol=1)
        b = OneSidedWord(prefix=FiniteWord(alphabet=A2), tail_symbol=2)
        window, t = conjugacy_S(a, b, 0.5, radius=3)
        assert (window.lo, window.hi) == (-2, 3)
        assert window.symbols == (2, 2, 2, 1, 1, 1)
        assert t == 0.5
        a2, b2, _ = split_S(window, t)
        assert a2.symbols == (1, 1, 1)
        assert b2.symbols == (2, 2, 2)


class TestQuotientFiber:
    def test_zero_two_window(self):
        F = relation_catalog("exx2")
        assert exx2_apex_fiber(h_window(F, -1, (0.0, 2.0, 0.0), (2, 2)))

    def test_generic_window(self):
        F = relation_catalog("exx2")
        assert not exx2_apex_fiber(h_window(F, -1, (0.5, 2.5, 0.5), (2, 2)))


class TestMetrics:
    def test_dplus_geometric(self):
        assert metric_dplus([1.0] * 5, [0.0] * 5).value == pytest.approx(1 - 2 ** -5)

    def test_dplus_two_terms(self):
        assert metric_dplus([1.0, 0.0], [0.0, 1.0]).value == pytest.approx(0.75)

    def test_dplus_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            metric_dplus([1.0], [1.0, 0.0])

    def test_d2_identity(self, relation_h):
        w = h_window(relation_h, -1, (1.0, 1.0, 0.5), (2, 1))
        assert metric_d2(w, w).value == 0.0

    def test_d2_weights(self, relation_h):
        zeros = h_window(relation_h, -1, (0.0, 0.0, 0.0), (1, 1))
        ones = h_window(relation_h, -1, (1.0, 1.0, 1.0), (2, 2))
        assert metric_d2(zeros, ones).value == pytest.approx(2.0)

    def test_d2_window_mismatch(self, relation_h):
        a = h_window(relation_h, -1, (0.0, 0.0, 0.0), (1, 1))
        b = h_window(relation_h, 0, (0.0, 0.0), (1,))
        with pytest.raises(WindowMismatch):
            metric_d2(a, b)

    def test_dplus_triangle_inequality(self, rng):
        for x, y, z in rng.uniform(0.0, 1.0, size=(1000, 3, 8)):
            xz = metric_dplus(x, z)
            assert xz.value <= metric_dplus(x, y).value + metric_dplus(y, z).value + 1e-12
            assert 0.0 <= xz.value <= 1.0 - 2 ** -8
            assert xz.bound == 2 ** -8
            assert metric_dplus(x, x).value == 0.0

    def test_d2_triangle_inequality(self, relation_h, rng):
        for _ in range(1000):
            x, y, z = (random_window(relation_h, rng, -4, 4) for _ in range(3))
            xz = metric_d2(x, z).value
            assert xz <= metric_d2(x, y).value + metric_d2(y, z).value + 1e-12
            assert xz == pytest.approx(metric_d2(z, x).value)
            assert 0.0 <= xz <= 3 * relation_h.diam

    @given(
        x=st.lists(st.floats(min_value=0, max_value=1), min_size=1, max_size=10),
        y=st.lists(st.floats(min_value=0, max_value=1), min_size=1, max_size=10),
    )
    @settings(max_examples=50)
    def test_dplus_symmetric_and_bounded(self, x, y):
        n = min(len(x), len(y))
        d = metric_dplus(x[:n], y[:n]).value
        assert d == pytest.approx(metric_dplus(y[:n], x[:n]).value)
        assert 0.0 <= d <= 1.0


class TestCsv:
    def test_header(self):
        assert csv_header(3) == ["value_1", "value_2", "value_3", "choices"]

    def test_row(self, relation_h):
        assert csv_row(h_word(relation_h, (1.0, 0.5), (1,))) == ["1.0", "0.5", "1"]
