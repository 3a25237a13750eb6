import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from errors import AlphabetMismatch, OutOfRange, WindowTooShort
from models import Alphabet, FiniteWord, OneSidedWord, TwoSidedSymbolWindow
from symbolic import (
    concat, closeness_depth, enumerate_words, n_close, reverse_prefix, shift_one_sided, shift_two_sided, word
)

A3 = Alphabet(size=3)


def one_sided(symbols, tail=1, alphabet=A3):
    return OneSidedWord(prefix=FiniteWord(alphabet=alphabet, symbols=tuple(symbols)), tail_symbol=tail)


def window(lo, symbols, alphabet=A3):
    return TwoSidedSymbolWindow(alphabet=alphabet, lo=lo, hi=lo + len(symbols) - 1, symbols=tuple(symbols))


class TestModels:
    def test_symbol_outside_alphabet(self):
        with pytest.raises(ValidationError):
            FiniteWord(alphabet=A3, symbols=(1, 4))

    def test_window_length_must_match(self):
        with pytest.raises(ValidationError):
            TwoSidedSymbolWindow(alphabet=A3, lo=-1, hi=2, symbols=(1, 2))

    def test_one_sided_take_pads_with_tail(self):
        assert one_sided([3, 2], tail=2).take(5) == (3, 2, 2, 2, 2)

    def test_word_from_size(self):
        assert word(2, [1, 2]) == FiniteWord(alphabet=Alphabet(size=2), symbols=(1, 2))


class TestShiftOneSided:
    @pytest.mark.parametrize("prefix, tail, expected", [
        ((1, 2), 1, (2,)),
        ((), 1, ()),
        ((3, 3, 2), 2, (3, 2)),
    ])
    def test_drops_first_symbol(self, prefix, tail, expected):
        shifted = shift_one_sided(one_sided(prefix, tail))
        assert shifted.prefix.symbols == expected
        assert shifted.tail_symbol == tail


class TestShiftTwoSided:
    def test_forward_reindexes(self):
        w = window(-1, [1, 2, 3, 1])
        shifted = shift_two_sided(w, "forward")
        assert (shifted.lo, shifted.hi) == (-2, 1)
        assert shifted.symbols == w.symbols

    def test_forward_then_backward_is_identity(self):
        w = window(-2, [1, 2, 3, 1, 2])
        assert shift_two_sided(shift_two_sided(w, "forward"), "backward") == w

    def test_forward_on_short_window(self):
        with pytest.raises(WindowTooShort):
            shift_two_sided(window(0, [1, 2]), "forward")

    def test_backward_on_short_window(self):
        with pytest.raises(WindowTooShort):
            shift_two_sided(window(0, [1, 2, 3]), "backward")


class TestConcat:
    def test_finite(self):
        assert concat(word(3, [1, 2]), word(3, [3])).symbols == (1, 2, 3)

    def test_empty_left(self):
        w = word(3, [2, 1])
        assert concat(word(3), w) == w

    def test_onto_one_sided(self):
        assert concat(word(3, [1]), one_sided([2])) == one_sided([1, 2])

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatch):
            concat(word(2, [1]), word(3, [1]))


class TestReversePrefix:
    @pytest.mark.parametrize("symbols, m, expected", [
        ((1, 2, 3), 3, (3, 2, 1)),
        ((1, 2, 3), 1, (1,)),
    ])
    def test_reverses(self, symbols, m, expected):
        assert reverse_prefix(word(3, symbols), m).symbols == expected

    def test_too_long(self):
        with pytest.raises(OutOfRange):
            reverse_prefix(word(3, [2, 2]), 3)

    def test_one_sided_uses_tail(self):
        assert reverse_prefix(one_sided([2], tail=3), 3).symbols == (3, 3, 2)


class TestNClose:
    def test_tail_weight_below_eps(self):
        assert n_close((0.1, 0.2, 0.3, 0.4, 0.9), (0.1, 0.2, 0.3, 0.4, 0.0), 4, 0.2)

    def test_tail_weight_above_eps(self):
        assert not n_close((0.1, 0.2, 0.3, 0.4), (0.1, 0.2, 0.3, 0.4), 4, 0.1)

    def test_first_coordinate_differs(self):
        assert not n_close((0.0, 0.2, 0.3, 0.4), (0.5, 0.2, 0.3, 0.4), 4, 10.0)

    @pytest.mark.parametrize("eps, depth", [(1.0, 2), (0.2, 4), (0.01, 8)])
    def test_closeness_depth(self, eps, depth):
        assert closeness_depth(eps) == depth


class TestEnumerateWords:
    def test_length_one(self):
        assert [w.symbols for w in enumerate_words(Alphabet(size=2), 1)] == [(1,), (2,)]

    def test_length_zero(self):
        assert [w.symbols for w in enumerate_words(A3, 0)] == [()]

    def test_length_two_lexicographic(self):
        assert [w.symbols for w in enumerate_words(Alphabet(size=2), 2)] == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_negative_length(self):
        with pytest.raises(OutOfRange):
            enumerate_words(A3, -1)


symbols_3 = st.lists(st.integers(min_value=1, max_value=3), max_size=8)


class TestShiftProperties:
    @given(head=st.integers(min_value=1, max_value=3), rest=symbols_3, tail=st.integers(min_value=1, max_value=3))
    @settings(max_examples=50)
    def test_shift_undoes_prepend(self, head, rest, tail):
        w = one_sided(rest, tail)
        assert shift_one_sided(concat(word(3, [head]), w)) == w

    @given(left=symbols_3, right=symbols_3)
    @settings(max_examples=50)
    def test_concat_lengths_add(self, left, right):
        assert len(concat(word(3, left), word(3, right))) == len(left) + len(right)
