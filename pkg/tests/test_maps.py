import json
import math

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from errors import NotInvertible, OutOfDomain, OutOfImage, UnknownName, UsageError
from maps import (
    CATALOG, catalog, compose_runs_log, compose_word, eval_map, injective, inverse_word_compose, invert,
    iterate_log, load_family, log_eval, resolve_family, run_lengths, safe_exp
)
from models import PiecewiseMap, Piece
from maps.catalog import affine
from symbolic import word


class TestCatalog:
    def test_definicija(self, definicija):
        assert len(definicija.maps) == 3
        assert all(f.invertible for f in definicija.maps)
        assert definicija.domain.intervals == ((0.0, 1.0),)

    def test_exx2_swaps_components(self):
        fam = catalog("exx2")
        assert fam.domain.intervals == ((0.0, 1.0), (2.0, 3.0))
        swap = fam.map(2)
        assert eval_map(swap, 0.25) == pytest.approx(2.25)
        assert eval_map(swap, 2.5) == pytest.approx(0.5)

    def test_h_branches(self, h_family):
        assert eval_map(h_family.map(1), 0.5) == pytest.approx(0.0625)
        assert eval_map(h_family.map(2), 0.25) == pytest.approx(0.5)

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            catalog("nope")


class TestEvalMap:
    def test_sqrt(self, definicija):
        assert eval_map(definicija.map(1), 0.25) == pytest.approx(0.5)

    def test_breakpoint_consistency(self, definicija):
        assert eval_map(definicija.map(2), 2 / 3) == pytest.approx(1 / 3)

    def test_tent_peak(self):
        assert eval_map(catalog("tent").map(1), 0.5) == pytest.approx(1.0)

    def test_outside_domain(self, definicija):
        with pytest.raises(OutOfDomain):
            eval_map(definicija.map(1), 1.5)

    def test_discontinuous_pieces_rejected(self):
        with pytest.raises(ValidationError):
            PiecewiseMap(pieces=(
                Piece(interval=(0.0, 0.5), expr=affine(1.0, 0.0)),
                Piece(interval=(0.5, 1.0), expr=affine(1.0, 0.5)),
            ))


class TestInvert:
    def test_sqrt(self, definicija):
        assert invert(definicija.map(1), 0.5) == pytest.approx(0.25)

    def test_negate(self, exx3):
        assert invert(exx3.branches.map(1), 0.7) == pytest.approx(-0.7)

    def test_half_cube_on_its_image(self, h_family):
        assert invert(h_family.map(1), 1 / 16) == pytest.approx(0.5)

    def test_half_cube_outside_image(self, h_family):
        with pytest.raises(OutOfImage):
            invert(h_family.map(1), 0.9)

    def test_tent_not_injective(self):
        tent = catalog("tent").map(1)
        assert not injective(tent)
        with pytest.raises(NotInvertible):
            invert(tent, 0.5)

    def test_half_or_double_is_injective(self, definicija):
        assert injective(definicija.map(2))


CATALOG_MAPS = [(name, k) for name in sorted(CATALOG) for k in range(1, len(catalog(name).maps) + 1)]
INVERTIBLE_MAPS = [(name, k) for name, k in CATALOG_MAPS if catalog(name).map(k).invertible]


def interior_samples(piece, rng, size=1000, margin=1e-3):
    a, b = piece.interval
    return [float(t) for t in rng.uniform(a + margin, b - margin, size=size)]


class TestCatalogMaps:
    @pytest.mark.parametrize("name, k", CATALOG_MAPS)
    def test_pieces_meet_at_breakpoints(self, name, k):
        f = catalog(name).map(k)
        for left, right in zip(f.pieces, f.pieces[1:]):
            if left.interval[1] == right.interval[0]:
                at = left.interval[1]
                assert left.expr.value(at) == pytest.approx(right.expr.value(at), abs=1e-12)

    @pytest.mark.parametrize("name, k", CATALOG_MAPS)
    def test_small_steps_move_values_little(self, name, k, rng):
        f = catalog(name).map(k)
        for piece in f.pieces:
            for t in interior_samples(piece, rng):
                assert abs(eval_map(f, t + 1e-9) - eval_map(f, t)) < 1e-6

    @pytest.mark.parametrize("name, k", INVERTIBLE_MAPS)
    def test_invert_undoes_eval(self, name, k, rng):
        f = catalog(name).map(k)
        for piece in f.pieces:
            for t in interior_samples(piece, rng):
                assert invert(f, eval_map(f, t)) == pytest.approx(t, abs=1e-12)


class TestCompose:
    def test_word_order(self, definicija):
        assert compose_word(definicija, word(3, [1, 2]), 0.25) == pytest.approx(0.25)

    def test_h_word(self, h_family):
        assert compose_word(h_family, word(2, [1, 2]), 1.0) == pytest.approx(math.sqrt(0.5))

    def test_inverse_single(self, definicija):
        assert inverse_word_compose(definicija, word(3, [1]), 0.5) == pytest.approx(0.25)

    def test_inverse_involution(self, exx3):
        assert inverse_word_compose(exx3.branches, word(2, [1, 1]), 0.3) == pytest.approx(0.3)

    @given(t=st.floats(min_value=0.01, max_value=0.99), symbols=st.lists(st.integers(1, 3), min_size=1, max_size=6))
    @settings(max_examples=50)
    def test_inverse_undoes_compose(self, t, symbols):
        fam = catalog("definicija")
        image = compose_word(fam, word(3, symbols), t)
        back = inverse_word_compose(fam, word(3, list(reversed(symbols))), image)
        assert back == pytest.approx(t, abs=1e-6)


class TestLogSpace:
    def test_log_eval_matches_direct(self, h_family):
        assert log_eval(h_family.map(1), math.log(0.5)) == pytest.approx(math.log(0.0625))

    def test_halving_run_is_jumped(self, definicija):
        assert iterate_log(definicija.map(2), math.log(0.5), 10_000) == pytest.approx(math.log(0.5) - 10_000 * math.log(2))

    def test_runs_match_word(self, definicija):
        symbols = [3, 3, 2, 1, 1, 1]
        direct = compose_word(definicija, word(3, symbols), 0.8)
        assert safe_exp(compose_runs_log(definicija, run_lengths(symbols), math.log(0.8))) == pytest.approx(direct)

    def test_run_lengths(self):
        assert run_lengths([1, 1, 2, 3, 3, 3]) == [(1, 2), (2, 1), (3, 3)]


class TestLoader:
    def test_round_trip_file(self, tmp_path):
        path = tmp_path / "rel.json"
        path.write_text(json.dumps({
            "name": "halves",
            "domain": [[0.0, 1.0]],
            "branches": [
                {"invertible": False, "pieces": [{"interval": [0.0, 1.0], "expr": {"kind": "affine", "a": 0.5, "b": 0.0}}]},
                {"invertible": False, "pieces": [{"interval": [0.0, 1.0], "expr": {"kind": "affine", "a": -0.5, "b": 1.0}}]},
            ]
        }))
        fam = load_family(str(path))
        assert fam.name == "halves"
        assert eval_map(fam.map(2), 0.0) == pytest.approx(1.0)
        assert resolve_family(str(path)) == fam

    def test_invalid_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"domain": [[0.0, 1.0]], "branches": [{"pieces": []}]}))
        with pytest.raises(UsageError):
            load_family(str(path))

    def test_resolve_catalog_name(self):
        assert resolve_family("exx3").name == "exx3"

    def test_resolve_unknown(self, tmp_path):
        with pytest.raises(UnknownName):
            resolve_family(str(tmp_path / "missing.json"))
