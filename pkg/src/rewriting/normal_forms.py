"""Normal-form providers used to decide equality in a presented monoid or group"""

from typing import Callable, Dict, Optional

from ..utils.exceptions import NonterminationSuspected
from ..words import Alphabet, Word
from .reduction import DEFAULT_STEP_LIMIT, normalize
from .system import RewritingSystem


class NormalFormProvider:
    """
    Maps words to canonical representatives.

    `normal_form` returns None when the representative is unknown.
    `definitive` says whether different normal forms prove inequality.
    """

    definitive = False

    def normal_form(self, w: Word) -> Optional[Word]:
        raise NotImplementedError

    def equal(self, u: Word, v: Word) -> Optional[bool]:
        a, b = self.normal_form(u), self.normal_form(v)
        if a is None or b is None:
            return None
        if a == b:
            return True
        return False if self.definitive else None


class CompletedSystemNormalForms(NormalFormProvider):
    """Normal forms from a complete rewriting system"""

    definitive = True

    def __init__(self, system: RewritingSystem, step_limit: int = DEFAULT_STEP_LIMIT):
        self.system = system
        self.step_limit = step_limit
        self._cache: Dict[Word, Word] = {}

    def normal_form(self, w):
        w = tuple(w)
        if w not in self._cache:
            try:
                self._cache[w] = normalize(w, self.system, self.step_limit)
            except NonterminationSuspected:
                return None
        return self._cache[w]


class TrivialGroupNormalForms(NormalFormProvider):
    """Every word represents the identity"""

    definitive = True

    def normal_form(self, w):
        return ()


class FreeGroupNormalForms(NormalFormProvider):
    """Free reduction; exact for presentations without relators"""

    definitive = True

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def normal_form(self, w):
        return self.alphabet.free_reduce(w)


class MonoidTableNormalForms(NormalFormProvider):
    """
    Words over letters mapped into a finite monoid; the normal form of w is
    the 1-letter word naming its element.
    """

    definitive = True

    def __init__(self, monoid, letter_values: Dict[str, int]):
        """
        Args:
            monoid: FiniteMonoid
            letter_values: letter -> element index
        """
        self.monoid = monoid
        self.letter_values = dict(letter_values)

    def normal_form(self, w):
        value = self.monoid.evaluate(self.letter_values[x] for x in w)
        return (self.monoid.names[value],)


def congruence_oracle(provider: NormalFormProvider) -> Callable[[Word, Word], Optional[bool]]:
    """(u, v) -> True / False / None(unknown)"""
    return provider.equal
