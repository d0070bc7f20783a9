"""Alphabets and words over them"""

import itertools
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from ..utils.exceptions import AlphabetError
from .ordering import Ordering


Word = Tuple[str, ...]

EMPTY: Word = ()
EMPTY_TOKEN = '1'
INVERSE_SUFFIX = '^-1'


class Alphabet:
    """
    Ordered set of letter tokens, optionally with a formal-inverse pairing.

    Words are plain tuples of tokens. The alphabet owns every operation that
    needs the letter order or the pairing.
    """

    def __init__(self, letters: Sequence[str], inverses: Optional[Dict[str, str]] = None,
                 order: Optional[Sequence[str]] = None):
        """
        Args:
            letters: Distinct tokens
            inverses: Optional involution letter -> inverse letter (no fixed points)
            order: Optional explicit total order; defaults to declaration order
        """
        letters = tuple(letters)
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"repeated letter in {letters}")
        for token in letters:
            if not token or any(ch.isspace() for ch in token) or token == EMPTY_TOKEN:
                raise AlphabetError(f"invalid letter token {token!r}")

        if order is not None:
            order = tuple(order)
            if sorted(order) != sorted(letters):
                raise AlphabetError("explicit order must list every letter exactly once")
            letters = order
        self.letters: Tuple[str, ...] = letters
        self.rank: Dict[str, int] = {x: i for i, x in enumerate(letters)}

        self._inverse: Optional[Dict[str, str]] = None
        if inverses is not None:
            pairing = dict(inverses)
            for x, y in list(pairing.items()):
                pairing.setdefault(y, x)
            for x, y in pairing.items():
                if x not in self.rank or y not in self.rank:
                    raise AlphabetError(f"pairing mentions unknown letter {x!r}/{y!r}")
                if x == y or pairing.get(y) != x:
                    raise AlphabetError(f"pairing is not a fixed-point-free involution at {x!r}")
            if set(pairing) != set(letters):
                missing = sorted(set(letters) - set(pairing))
                raise AlphabetError(f"letters without inverse: {missing}")
            self._inverse = pairing

    @classmethod
    def free_group(cls, generators: Sequence[str]) -> 'Alphabet':
        """Alphabet x, x^-1, y, y^-1, ... with the obvious pairing"""
        letters = []
        pairing = {}
        for x in generators:
            if x.endswith(INVERSE_SUFFIX):
                raise AlphabetError(f"generator {x!r} already looks like an inverse")
            letters.extend([x, x + INVERSE_SUFFIX])
            pairing[x] = x + INVERSE_SUFFIX
        return cls(letters, pairing)

    # -- basic queries -------------------------------------------------

    @property
    def has_pairing(self) -> bool:
        return self._inverse is not None

    def __len__(self):
        return len(self.letters)

    def __contains__(self, token):
        return token in self.rank

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.letters == other.letters and self._inverse == other._inverse

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({' '.join(self.letters)})"

    def pairing(self) -> Optional[Dict[str, str]]:
        return dict(self._inverse) if self._inverse is not None else None

    def inverse_letter(self, x: str) -> str:
        if self._inverse is None:
            raise AlphabetError("alphabet has no inverse pairing")
        return self._inverse[x]

    def validate(self, w: Iterable[str]) -> Word:
        w = tuple(w)
        for x in w:
            if x not in self.rank:
                raise AlphabetError(f"unknown letter {x!r}")
        return w

    # -- word literals --------------------------------------------------

    def parse(self, text: str) -> Word:
        """
        Parse a word literal: space-separated tokens, `1` for the empty word,
        `x^-1` for the paired inverse of x.
        """
        tokens = text.split()
        if tokens == [EMPTY_TOKEN]:
            return EMPTY
        word = []
        for token in tokens:
            if token in self.rank:
                word.append(token)
            elif token.endswith(INVERSE_SUFFIX) and token[:-len(INVERSE_SUFFIX)] in self.rank \
                    and self._inverse is not None:
                word.append(self._inverse[token[:-len(INVERSE_SUFFIX)]])
            else:
                raise AlphabetError(f"unknown letter {token!r}")
        return tuple(word)

    @staticmethod
    def format(w: Word) -> str:
        return ' '.join(w) if w else EMPTY_TOKEN

    # -- free monoid / free group ----------------------------------------

    def concat(self, u: Word, v: Word) -> Word:
        return self.validate(u) + self.validate(v)

    def free_reduce(self, w: Word) -> Word:
        """Unique freely reduced word equivalent to w (stack cancellation)"""
        if self._inverse is None:
            raise AlphabetError("free reduction needs an inverse pairing")
        stack = []
        for x in w:
            if stack and self._paired(x) == stack[-1]:
                stack.pop()
            else:
                stack.append(x)
        return tuple(stack)

    def _paired(self, x: str) -> str:
        try:
            return self._inverse[x]
        except KeyError:
            raise AlphabetError(f"unknown letter {x!r}") from None

    def formal_inverse(self, w: Word) -> Word:
        if self._inverse is None:
            raise AlphabetError("formal inverse needs an inverse pairing")
        return tuple(self._paired(x) for x in reversed(w))

    def is_reduced(self, w: Word) -> bool:
        if self._inverse is None:
            raise AlphabetError("free reduction needs an inverse pairing")
        return all(self._paired(a) != b for a, b in zip(w, w[1:]))

    # -- length-lexicographic order ---------------------------------------

    def sort_key(self, w: Word):
        rank = self.rank
        return (len(w), tuple(rank[x] for x in w))

    def compare(self, u: Word, v: Word) -> Ordering:
        ku, kv = self.sort_key(u), self.sort_key(v)
        if ku < kv:
            return Ordering.LESS
        if ku > kv:
            return Ordering.GREATER
        return Ordering.EQUAL

    def words(self, length: int) -> Iterator[Word]:
        """All words of exactly this length, in llex order"""
        return itertools.product(self.letters, repeat=length)

    def words_up_to(self, length: int) -> Iterator[Word]:
        for n in range(length + 1):
            yield from self.words(n)

    def reduced_words_up_to(self, length: int) -> Iterator[Word]:
        for w in self.words_up_to(length):
            if self.is_reduced(w):
                yield w


def concat(u: Word, v: Word, alphabet: Alphabet) -> Word:
    return alphabet.concat(u, v)


def free_reduce(w: Word, alphabet: Alphabet) -> Word:
    return alphabet.free_reduce(w)


def formal_inverse(w: Word, alphabet: Alphabet) -> Word:
    return alphabet.formal_inverse(w)


def llex_compare(u: Word, v: Word, alphabet: Alphabet) -> Ordering:
    return alphabet.compare(u, v)
