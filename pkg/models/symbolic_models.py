from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Tuple


class Alphabet(BaseModel):
    """The symbol set 1..size"""
    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1)

    def __contains__(self, symbol: int) -> bool:
        return 1 <= symbol <= self.size


class FiniteWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    symbols: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def check_symbols(self):
        if self.symbols and (min(self.symbols) < 1 or max(self.symbols) > self.alphabet.size):
            raise ValueError(f"symbols must lie in 1..{self.alphabet.size}")
        return self

    def __len__(self) -> int:
        return len(self.symbols)

    def at(self, k: int) -> int:
        """Symbol at 1-based position k"""
        return self.symbols[k - 1]


class OneSidedWord(BaseModel):
    """Finite prefix followed by a constant tail"""
    model_config = ConfigDict(frozen=True)

    prefix: FiniteWord
    tail_symbol: int = 1

    @model_validator(mode="after")
    def check_tail(self):
        if self.tail_symbol not in self.prefix.alphabet:
            raise ValueError(f"tail symbol must lie in 1..{self.prefix.alphabet.size}")
        return self

    @property
    def alphabet(self) -> Alphabet:
        return self.prefix.alphabet

    def at(self, k: int) -> int:
        if k <= len(self.prefix):
            return self.prefix.symbols[k - 1]
        return self.tail_symbol

    def take(self, n: int) -> Tuple[int, ...]:
        """First n symbols of the materialized sequence"""
        head = self.prefix.symbols[:n]
        return head + (self.tail_symbol,) * (n - len(head))


class TwoSidedSymbolWindow(BaseModel):
    """Symbols at indices lo..hi; index 0 sits left of the basepoint"""
    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    lo: int = Field(le=0)
    hi: int = Field(ge=1)
    symbols: Tuple[int, ...]

    @model_validator(mode="after")
    def check_window(self):
        if len(self.symbols) != self.hi - self.lo + 1:
            raise ValueError("window length must be hi - lo + 1")
        if min(self.symbols) < 1 or max(self.symbols) > self.alphabet.size:
            raise ValueError(f"symbols must lie in 1..{self.alphabet.size}")
        return self

    def at(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise IndexError(k)
        return self.symbols[k - self.lo]
