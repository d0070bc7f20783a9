"""Y-symbols, Y-sequences and words over Y ∪ Y⁻¹"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from ..utils.exceptions import SequenceError
from ..words import Alphabet, Word


@dataclass(frozen=True)
class YSymbol:
    """(^u r)^ε with u a freely reduced conjugator and r a relator label"""

    u: Word
    r: str
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise SequenceError(f"symbol exponent must be +1 or -1, got {self.eps}")

    def flip(self) -> 'YSymbol':
        return YSymbol(self.u, self.r, -self.eps)

    def conjugated(self, u: Word) -> 'YSymbol':
        return YSymbol(tuple(u), self.r, self.eps)

    def __str__(self):
        sign = '+1' if self.eps > 0 else '-1'
        return f"({Alphabet.format(self.u)}; {self.r}; {sign})"


YSequence = Tuple[YSymbol, ...]


@dataclass(frozen=True)
class UpsilonLetter:
    """σ(a) or, with `inverted`, its formal inverse in Y⁻¹"""

    symbol: YSymbol
    inverted: bool = False

    def __str__(self):
        return f"{self.symbol}^-1" if self.inverted else str(self.symbol)


UpsilonWord = Tuple[UpsilonLetter, ...]


def sequence(symbols: Iterable[YSymbol]) -> YSequence:
    return tuple(symbols)


def upsilon_word(s: Iterable[YSymbol]) -> UpsilonWord:
    """σ(a₁)⋯σ(a_n) for a Y-sequence"""
    return tuple(UpsilonLetter(a) for a in s)


def u_generator(a: YSymbol) -> UpsilonWord:
    """σ(a)σ(a⁻¹), a generator of the submonoid 𝔘"""
    return (UpsilonLetter(a), UpsilonLetter(a.flip()))


def is_u_generator(first: UpsilonLetter, second: UpsilonLetter) -> bool:
    return first.inverted == second.inverted and second.symbol == first.symbol.flip()


def is_u_product(w: UpsilonWord) -> bool:
    """w splits as consecutive 𝔘-generators"""
    if len(w) % 2:
        return False
    return all(is_u_generator(w[i], w[i + 1]) for i in range(0, len(w), 2))


def format_sequence(s: Iterable[YSymbol]) -> str:
    return '[' + ', '.join(str(a) for a in s) + ']'
