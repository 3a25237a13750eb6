import json

import pytest

from errors import InfeasibleTarget, NotApplicable, OutOfRange, UsageError, WindowTooShort
from models import Alphabet, CylinderTarget, FiniteWord, OneSidedWord, ShiftSide, SkewState, TransitiveTarget, TwoSidedSymbolWindow
from symbolic import word
from transitivity import (
    auto_targets, build_sigma_chain, build_transitive_point, conjugate_sorting_step, coverage_csv_rows, eps_schedule,
    feasible_sets, inverse_limit_point, inverse_limit_readback, inverse_limit_shift, load_targets,
    orbit_coverage, product_shift, product_unshift, skew_inverse_step, skew_orbit, skew_preimage, skew_step,
    system_for, target_depth, targets_from_cylinders, verify_sigma_chain, verify_transitive_point
)

A3 = Alphabet(size=3)


def one_sided(symbols, tail=1):
    return OneSidedWord(prefix=FiniteWord(alphabet=A3, symbols=tuple(symbols)), tail_symbol=tail)


def two_sided(lo, symbols):
    return TwoSidedSymbolWindow(alphabet=A3, lo=lo, hi=lo + len(symbols) - 1, symbols=tuple(symbols))


def random_state(rng, lo=-4, hi=4):
    symbols = rng.integers(1, 4, size=hi - lo + 1)
    return SkewState(symbols=two_sided(lo, [int(k) for k in symbols]), t=float(rng.uniform(0.0, 1.0)))


class TestSkewStep:
    def test_tail_only_word(self, definicija):
        s = skew_step(system_for(definicija), SkewState(symbols=one_sided([]), t=0.25))
        assert s.t == pytest.approx(0.5)
        assert s.symbols == one_sided([])

    def test_uses_leading_symbol(self, definicija):
        s = skew_step(system_for(definicija), SkewState(symbols=one_sided([3, 2]), t=0.5))
        assert s.t == pytest.approx(0.25)
        assert s.symbols.prefix.symbols == (2,)

    def test_two_sided_round_trip(self, definicija):
        sys = system_for(definicija, ShiftSide.two_sided)
        s = SkewState(symbols=two_sided(-3, [1, 2, 3, 2, 1, 3, 2]), t=0.4)
        back = skew_inverse_step(sys, skew_step(sys, s))
        assert back.symbols == s.symbols
        assert back.t == pytest.approx(0.4)

    def test_one_sided_has_no_inverse(self, definicija):
        with pytest.raises(OutOfRange):
            skew_inverse_step(system_for(definicija), SkewState(symbols=one_sided([1]), t=0.5))

    def test_preimage_maps_back(self, definicija):
        sys = system_for(definicija)
        s = SkewState(symbols=one_sided([]), t=0.25)
        pre = skew_preimage(sys, s)
        assert pre.symbols.prefix.symbols == (1,)
        assert pre.t == pytest.approx(0.0625)
        stepped = skew_step(sys, pre)
        assert stepped.symbols == s.symbols
        assert stepped.t == pytest.approx(0.25)

    def test_every_state_has_a_preimage(self, definicija, rng):
        sys = system_for(definicija)
        for _ in range(1000):
            symbols = [int(k) for k in rng.integers(1, 4, size=int(rng.integers(0, 5)))]
            s = SkewState(symbols=one_sided(symbols), t=float(rng.uniform(0.0, 1.0)))
            for k in (1, 2, 3):
                stepped = skew_step(sys, skew_preimage(sys, s, symbol=k))
                assert stepped.symbols == s.symbols
                assert stepped.t == pytest.approx(s.t, abs=1e-12)


class TestSkewOrbit:
    def test_zero_steps(self, definicija):
        s0 = SkewState(symbols=one_sided([2]), t=0.5)
        assert skew_orbit(system_for(definicija), s0, 0) == [s0]

    def test_negative_steps(self, definicija):
        with pytest.raises(OutOfRange):
            skew_orbit(system_for(definicija), SkewState(symbols=one_sided([2]), t=0.5), -1)

    def test_window_too_short(self, definicija):
        s0 = SkewState(symbols=two_sided(-1, [1, 2, 3, 1]), t=0.5)
        with pytest.raises(WindowTooShort):
            skew_orbit(system_for(definicija, ShiftSide.two_sided), s0, 3)

    def test_length(self, definicija):
        orbit = skew_orbit(system_for(definicija), SkewState(symbols=one_sided([3, 3]), t=0.9), 5)
        assert len(orbit) == 6
        assert orbit[2].t == pytest.approx(0.9 ** 4)


class TestInverseLimit:
    def test_readback(self, definicija):
        a, b = one_sided([2, 1]), word(3, [1, 3])
        coords = inverse_limit_point(definicija, a, b, 0.3)
        assert len(coords) == 3
        a2, b2, t2 = inverse_limit_readback(coords)
        assert (a2, b2, t2) == (a, b, 0.3)

    def test_coordinates_are_linked_by_the_sorting_map(self, definicija):
        coords = inverse_limit_point(definicija, one_sided([2, 1]), word(3, [1, 3]), 0.3)
        sys = system_for(definicija)
        for earlier, later in zip(coords, coords[1:]):
            stepped = skew_step(sys, later)
            assert stepped.symbols == earlier.symbols
            assert stepped.t == pytest.approx(earlier.t)

    def test_shift_drops_a_coordinate(self, definicija):
        coords = inverse_limit_point(definicija, one_sided([2]), word(3, [1]), 0.3)
        assert inverse_limit_shift(coords) == coords[1:]
        with pytest.raises(WindowTooShort):
            inverse_limit_shift(coords[:1])

    def test_product_shift_round_trip(self, definicija):
        a, b = one_sided([2, 1]), word(3, [3, 2])
        a2, b2, t2 = product_unshift(definicija, *product_shift(definicija, a, b, 0.6))
        assert (a2, b2) == (a, b)
        assert t2 == pytest.approx(0.6)

    def test_conjugate_step_agrees_with_sorting_step(self, definicija, rng):
        sys = system_for(definicija, ShiftSide.two_sided)
        for _ in range(20):
            s = random_state(rng)
            direct, conjugate = skew_step(sys, s), conjugate_sorting_step(definicija, s)
            assert conjugate.symbols == direct.symbols
            assert conjugate.t == pytest.approx(direct.t, abs=1e-9)


class TestTransitivePoint:
    def test_single_target(self, definicija):
        target = TransitiveTarget(word=word(3, [2]), t=0.25)
        point = build_transitive_point(definicija, [target], [0.01], x0=0.5)
        s = point.hit_times[0]
        assert point.word.prefix.symbols[s] == 2
        assert len(point.word.prefix) == s + 1
        assert verify_transitive_point(definicija, point).all_hit

    @pytest.mark.parametrize("t, eps", [(0.25, 0.01), (0.8, 0.01), (0.1, 1e-3)])
    def test_hit_reached_by_plain_iteration(self, definicija, t, eps):
        target = TransitiveTarget(word=word(3, [2]), t=t)
        point = build_transitive_point(definicija, [target], [eps])
        s = point.hit_times[0]
        orbit = skew_orbit(system_for(definicija), SkewState(symbols=point.word, t=point.x0), s)
        assert orbit[s].t == pytest.approx(t, abs=eps)
        assert orbit[s].symbols.prefix.symbols[0] == 2

    def test_hit_times_increase(self, definicija):
        targets = [TransitiveTarget(word=word(3, [2]), t=0.25), TransitiveTarget(word=word(3, [3, 1]), t=0.8)]
        point = build_transitive_point(definicija, targets, [0.05, 0.05])
        assert point.hit_times[0] < point.hit_times[1]

    def test_no_targets(self, definicija):
        point = build_transitive_point(definicija, [])
        assert len(point.word.prefix) == 0
        assert verify_transitive_point(definicija, point).rows == ()

    def test_x0_interior(self, definicija):
        with pytest.raises(OutOfRange):
            build_transitive_point(definicija, [TransitiveTarget(word=word(3, [2]), t=0.25)], [0.01], x0=1.0)

    def test_schedule_length(self, definicija):
        with pytest.raises(UsageError):
            build_transitive_point(definicija, [TransitiveTarget(word=word(3, [2]), t=0.25)], [0.1, 0.1])

    def test_eps_schedule(self):
        assert eps_schedule(3, floor=0.2) == [0.5, 0.25, 0.2]

    def test_auto_targets_diagonal_order(self):
        targets = auto_targets(Alphabet(size=2), 3)
        assert [(t.word.symbols, t.t) for t in targets] == [((1,), 0.5), ((1,), 0.25), ((2,), 0.5)]

    def test_targets_from_cylinders(self):
        targets, schedule = targets_from_cylinders([CylinderTarget(word=word(3, [2]), box=((0.2, 0.3),), eps=0.5)])
        assert targets[0].t == pytest.approx(0.25)
        assert schedule == [pytest.approx(0.05)]

    def test_cylinder_without_word(self):
        with pytest.raises(UsageError):
            targets_from_cylinders([CylinderTarget(box=((0.2, 0.3),))])


class TestSigmaChain:
    def test_two_boxes(self, relation_h):
        targets = [CylinderTarget(box=((0.9, 1.0),)), CylinderTarget(box=((0.4, 0.6),))]
        chain = build_sigma_chain(relation_h, targets)
        assert chain.points[0].values[0] == 1.0
        assert verify_sigma_chain(chain, targets).all_hit

    def test_box_outside_domain(self, relation_h):
        with pytest.raises(InfeasibleTarget):
            build_sigma_chain(relation_h, [CylinderTarget(box=((2.0, 3.0),))])

    def test_no_targets(self, relation_h):
        with pytest.raises(InfeasibleTarget):
            build_sigma_chain(relation_h, [])

    def test_needs_relation_h(self, exx3):
        with pytest.raises(NotApplicable):
            build_sigma_chain(exx3, [CylinderTarget(box=((0.4, 0.6),))])

    def test_feasible_sets_single_box(self, relation_h):
        assert feasible_sets(relation_h, CylinderTarget(box=((0.9, 1.0),))) == [[(0.9, 1.0)]]

    def test_target_depth(self):
        assert target_depth(CylinderTarget(word=word(2, [1]))) == 2
        assert target_depth(CylinderTarget(box=((0.0, 0.5), (0.0, 0.5), (0.0, 0.5)))) == 3


class TestCoverage:
    def test_first_hits(self, definicija):
        orbit = skew_orbit(system_for(definicija), SkewState(symbols=one_sided([2]), t=0.5), 3)
        targets = [CylinderTarget(word=word(3, [2]), box=((0.4, 0.6),)), CylinderTarget(word=word(3, [3]))]
        report = orbit_coverage(orbit, targets)
        assert report.rows[0].hit_step == 0
        assert report.rows[1].hit_step is None
        assert report.fraction_hit == pytest.approx(0.5)
        assert coverage_csv_rows(report) == [["0", "0", "0.0"], ["1", "", ""]]


class TestLoadTargets:
    def test_load(self, tmp_path):
        path = tmp_path / "targets.json"
        path.write_text(json.dumps({"targets": [{"word": [2], "box": [[0.2, 0.3]], "eps": 0.01}]}))
        (target,) = load_targets(str(path), A3)
        assert target.word.symbols == (2,)
        assert target.box == ((0.2, 0.3),)

    def test_invalid(self, tmp_path):
        path = tmp_path / "targets.json"
        path.write_text(json.dumps({"targets": [{"word": [2], "eps": -1}]}))
        with pytest.raises(UsageError):
            load_targets(str(path), A3)
