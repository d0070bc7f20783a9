"""
Peiffer operations on Y-sequences

An exchange replaces an adjacent pair (a, b) by (^θ(a) b, a) (left) or by
(b, ^θ(b)⁻¹ a) (right). A deletion removes a pair (a, a⁻¹) with identical
conjugator and relator; an insertion is its inverse. Positions are 0-based:
index i addresses the pair (s[i], s[i+1]).
"""

from typing import Iterable, Sequence, Union

from ..utils.exceptions import PresentationError, SequenceError
from ..utils.logger import setup_logger
from ..words import Alphabet, Word
from ..pride.presentation import GroupPresentation
from . import searches
from .relation_module import relation_module_image
from .steps import (
    DELETE, EXCHANGE, INSERT, LEFT, RIGHT,
    PeifferStep, delete_step, exchange_step, insert_step,
)
from .symbols import UpsilonLetter, YSequence, YSymbol


Element = Union[YSymbol, UpsilonLetter]


class PeifferCalculus:
    """Peiffer operations, θ̃ and the F-action for one group presentation"""

    def __init__(self, presentation: GroupPresentation):
        self.presentation = presentation
        self.alphabet: Alphabet = presentation.alphabet
        self.logger = setup_logger('Peiffer')

    # -- symbols -------------------------------------------------------

    def symbol(self, u: Sequence[str], r: str, eps: int) -> YSymbol:
        """(^u r)^ε with u freely reduced"""
        self.presentation.relator(r)
        return YSymbol(self.alphabet.free_reduce(self.alphabet.validate(u)), r, eps)

    def validate(self, s: Iterable[YSymbol]) -> YSequence:
        s = tuple(s)
        for a in s:
            self.presentation.relator(a.r)
            if not self.alphabet.is_reduced(self.alphabet.validate(a.u)):
                raise SequenceError(f"conjugator of {a} is not freely reduced")
        return s

    def theta(self, a: Element) -> Word:
        """u r^ε u⁻¹, inverted for letters of Y⁻¹ (not reduced)"""
        symbol = a.symbol if isinstance(a, UpsilonLetter) else a
        r = self.presentation.relator(symbol.r)
        inv = self.alphabet.formal_inverse
        body = symbol.u + (r if symbol.eps > 0 else inv(r)) + inv(symbol.u)
        if isinstance(a, UpsilonLetter) and a.inverted:
            return inv(body)
        return body

    def theta_eval(self, s: Iterable[Element]) -> Word:
        """θ̃: free reduction of the concatenated conjugates"""
        word = []
        for a in s:
            word.extend(self.theta(a))
        return self.alphabet.free_reduce(tuple(word))

    def is_identity_sequence(self, s: Iterable[Element]) -> bool:
        return not self.theta_eval(s)

    def act(self, g: Word, a: Element) -> Element:
        """^g a: left-multiply the conjugator by g"""
        if isinstance(a, UpsilonLetter):
            return UpsilonLetter(self.act(g, a.symbol), a.inverted)
        return a.conjugated(self.alphabet.free_reduce(tuple(g) + a.u))

    # -- operations ------------------------------------------------------

    @staticmethod
    def _check_pair(s, i):
        if not 0 <= i < len(s) - 1:
            raise SequenceError(f"pair index {i} out of range for length {len(s)}")

    def exchange(self, s: Sequence[Element], i: int, direction: str = LEFT) -> tuple:
        """Peiffer exchange of the pair at i, on Y-sequences or words over Y ∪ Y⁻¹"""
        self._check_pair(s, i)
        a, b = s[i], s[i + 1]
        if direction == LEFT:
            pair = (self.act(self.theta(a), b), a)
        elif direction == RIGHT:
            pair = (b, self.act(self.alphabet.formal_inverse(self.theta(b)), a))
        else:
            raise SequenceError(f"unknown exchange direction {direction!r}")
        return tuple(s[:i]) + pair + tuple(s[i + 2:])

    def can_delete(self, s: Sequence[YSymbol], i: int) -> bool:
        return 0 <= i < len(s) - 1 and s[i + 1] == s[i].flip()

    def delete(self, s: Sequence[YSymbol], i: int) -> YSequence:
        self._check_pair(s, i)
        if not self.can_delete(s, i):
            raise SequenceError(f"symbols at {i} and {i + 1} are not a cancelling pair")
        return tuple(s[:i]) + tuple(s[i + 2:])

    def insert(self, s: Sequence[YSymbol], i: int, symbol: YSymbol) -> YSequence:
        """Insert (symbol, symbol⁻¹) before position i"""
        if not 0 <= i <= len(s):
            raise SequenceError(f"insertion index {i} out of range for length {len(s)}")
        symbol = self.validate([symbol])[0]
        return tuple(s[:i]) + (symbol, symbol.flip()) + tuple(s[i:])

    def apply(self, s: Sequence[YSymbol], step: PeifferStep) -> YSequence:
        if step.kind == EXCHANGE:
            return self.exchange(s, step.index, step.direction)
        if step.kind == DELETE:
            return self.delete(s, step.index)
        if step.kind == INSERT:
            return self.insert(s, step.index, step.symbol)
        raise SequenceError(f"unknown operation {step.kind!r}")

    def inverse_step(self, before: Sequence[YSymbol], step: PeifferStep) -> PeifferStep:
        """The step that undoes `step` applied to `before`"""
        if step.kind == EXCHANGE:
            return exchange_step(step.index, RIGHT if step.direction == LEFT else LEFT)
        if step.kind == INSERT:
            return delete_step(step.index)
        return insert_step(step.index, before[step.index])

    def replay(self, s: Sequence[YSymbol], trace: Iterable[PeifferStep]) -> YSequence:
        """
        Re-execute a trace

        Raises:
            SequenceError: some step is illegal where it is applied
        """
        current = self.validate(s)
        for n, step in enumerate(trace):
            try:
                current = self.apply(current, step)
            except SequenceError as exc:
                raise SequenceError(f"step {n} ({step}) is illegal: {exc}") from None
        return current

    def include(self, s: Iterable[YSymbol], sub: GroupPresentation) -> YSequence:
        """
        Map a sequence over a subpresentation into this presentation

        Relators are matched by word, so labels may differ between the two
        presentations. A sub relator equal to the inverse of a relator here
        maps to that relator with the exponent flipped.

        Raises:
            PresentationError: a relator word of `sub` is not a relator here
        """
        by_word = {word: label for label, word in self.presentation.relators}
        out = []
        for a in s:
            word = sub.relator(a.r)
            if word in by_word:
                out.append(YSymbol(a.u, by_word[word], a.eps))
                continue
            inverse = self.alphabet.formal_inverse(word)
            if inverse not in by_word:
                raise PresentationError(f"relator {a.r!r} of the subpresentation "
                                        f"({Alphabet.format(word)}) is not a relator here")
            out.append(YSymbol(a.u, by_word[inverse], -a.eps))
        return tuple(out)

    # -- searches ----------------------------------------------------------

    def equivalent_bounded(self, s, t, max_steps: int = 8, max_len: int = 8, **kwargs):
        return searches.equivalent_bounded(self, s, t, max_steps, max_len, **kwargs)

    def find_primary_pairing(self, s, oracle):
        return searches.find_primary_pairing(self, s, oracle)

    def reduce_primary(self, s, oracle, **kwargs):
        return searches.reduce_primary(self, s, oracle, **kwargs)

    def insertion_normal_probe(self, w, **kwargs):
        return searches.insertion_normal_probe(self, w, **kwargs)

    def centrality_witness(self, b: UpsilonLetter, g):
        return searches.centrality_witness(self, b, g)

    def relation_module_image(self, w, provider):
        return relation_module_image(w, provider)
