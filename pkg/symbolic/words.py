from itertools import product
from typing import List, Sequence, Tuple, Union

from errors import AlphabetMismatch, OutOfRange, WindowTooShort
from models import Alphabet, FiniteWord, MahavierWord, OneSidedWord, TwoSidedSymbolWindow

Word = Union[FiniteWord, OneSidedWord]


def word(alphabet: Union[Alphabet, int], symbols: Sequence[int] = ()) -> FiniteWord:
    """Build a FiniteWord from an alphabet or its size"""
    if isinstance(alphabet, int):
        alphabet = Alphabet(size=alphabet)
    return FiniteWord(alphabet=alphabet, symbols=tuple(symbols))


def shift_one_sided(w: OneSidedWord) -> OneSidedWord:
    if not w.prefix.symbols:
        return w
    return OneSidedWord(
        prefix=FiniteWord(alphabet=w.alphabet, symbols=w.prefix.symbols[1:]),
        tail_symbol=w.tail_symbol
    )


def shift_two_sided(w: TwoSidedSymbolWindow, direction: str = "forward") -> TwoSidedSymbolWindow:
    """
    Move the basepoint; content is kept and only the indices change.

    Forward needs hi >= 2 and backward needs lo <= -1, so the shifted window
    still holds indices 0 and 1.
    """
    if direction == "forward":
        if w.hi < 2:
            raise WindowTooShort(f"forward shift of window [{w.lo}, {w.hi}] leaves no index 1")
        return w.model_copy(update={"lo": w.lo - 1, "hi": w.hi - 1})
    if direction == "backward":
        if w.lo > -1:
            raise WindowTooShort(f"backward shift of window [{w.lo}, {w.hi}] leaves no index 0")
        return w.model_copy(update={"lo": w.lo + 1, "hi": w.hi + 1})
    raise ValueError(f"unknown direction {direction}")


def concat(left: FiniteWord, right: Word) -> Word:
    if left.alphabet != right.alphabet:
        raise AlphabetMismatch(f"alphabets of size {left.alphabet.size} and {right.alphabet.size}")
    if isinstance(right, OneSidedWord):
        return OneSidedWord(
            prefix=FiniteWord(alphabet=left.alphabet, symbols=left.symbols + right.prefix.symbols),
            tail_symbol=right.tail_symbol
        )
    return FiniteWord(alphabet=left.alphabet, symbols=left.symbols + right.symbols)


def reverse_prefix(w: Word, m: int) -> FiniteWord:
    """(w(m), w(m-1), ..., w(1))"""
    if m < 1:
        raise OutOfRange(f"m must be positive, got {m}")
    if isinstance(w, OneSidedWord):
        head = w.take(m)
    else:
        if m > len(w):
            raise OutOfRange(f"word of length {len(w)} has no prefix of length {m}")
        head = w.symbols[:m]
    return FiniteWord(alphabet=w.alphabet, symbols=tuple(reversed(head)))


def _coords(obj, n: int) -> Tuple:
    if isinstance(obj, OneSidedWord):
        return obj.take(n)
    if isinstance(obj, FiniteWord):
        return obj.symbols[:n]
    if isinstance(obj, MahavierWord):
        return obj.values[:n]
    return tuple(obj)[:n]


def n_close(x, y, n: int, eps: float, diam: float = 1.0, tol: float = 0.0) -> bool:
    """|x - y|_n < eps: first n coordinates agree and the tail weight beats eps"""
    a, b = _coords(x, n), _coords(y, n)
    if len(a) < n or len(b) < n:
        return False
    if any(abs(p - q) > tol for p, q in zip(a, b)):
        return False
    return diam * 2.0 ** (-(n - 1)) < eps


def closeness_depth(eps: float, diam: float = 1.0) -> int:
    """Smallest n with diam * 2^-(n-1) < eps"""
    n = 1
    while diam * 2.0 ** (-(n - 1)) >= eps:
        n += 1
    return n


def enumerate_words(alphabet: Alphabet, length: int) -> List[FiniteWord]:
    if length < 0:
        raise OutOfRange(f"length must be non-negative, got {length}")
    letters = range(1, alphabet.size + 1)
    return [FiniteWord(alphabet=alphabet, symbols=s) for s in product(letters, repeat=length)]
