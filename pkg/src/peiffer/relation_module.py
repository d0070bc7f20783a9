"""The map γ from words over Y ∪ Y⁻¹ to the relation module"""

from typing import Dict, Iterable

from ..rewriting import Unknown
from ..words import Alphabet, Word
from .symbols import UpsilonLetter, YSymbol


class RelationModuleElement:
    """
    Σ n · g^α · r^β, stored as relator label -> {normal form of g: n}.
    Zero coefficients are never stored.
    """

    def __init__(self, terms=None):
        self._terms: Dict[str, Dict[Word, int]] = {}
        for (label, g), n in (terms or {}).items():
            self.add(label, g, n)

    def add(self, label: str, g: Word, n: int) -> 'RelationModuleElement':
        if not n:
            return self
        row = self._terms.setdefault(label, {})
        value = row.get(g, 0) + n
        if value:
            row[g] = value
        else:
            del row[g]
            if not row:
                del self._terms[label]
        return self

    def coefficient(self, label: str, g: Word) -> int:
        return self._terms.get(label, {}).get(tuple(g), 0)

    def items(self):
        for label, row in self._terms.items():
            for g, n in row.items():
                yield (label, g), n

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, RelationModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: 'RelationModuleElement') -> 'RelationModuleElement':
        out = RelationModuleElement(dict(self.items()))
        for (label, g), n in other.items():
            out.add(label, g, n)
        return out

    def __sub__(self, other: 'RelationModuleElement') -> 'RelationModuleElement':
        out = RelationModuleElement(dict(self.items()))
        for (label, g), n in other.items():
            out.add(label, g, -n)
        return out

    def to_dict(self) -> Dict[str, Dict[str, int]]:
        return {label: {Alphabet.format(g): n for g, n in sorted(row.items())}
                for label, row in sorted(self._terms.items())}

    def __repr__(self):
        body = ' + '.join(f"{n}*{Alphabet.format(g)}.{label}" for (label, g), n in self.items())
        return f"RelationModuleElement({body or '0'})"


def relation_module_image(w: Iterable, provider):
    """
    γ: (^u r)^ε -> u^α·r^β whatever ε is; letters of Y⁻¹ contribute the negative

    Args:
        w: Word over Y ∪ Y⁻¹ (UpsilonLetters) or a Y-sequence
        provider: NormalFormProvider for the group

    Returns:
        RelationModuleElement, or Unknown when a conjugator has no normal form
    """
    out = RelationModuleElement()
    for letter in w:
        if isinstance(letter, YSymbol):
            letter = UpsilonLetter(letter)
        g = provider.normal_form(letter.symbol.u)
        if g is None:
            return Unknown(f"no normal form for {Alphabet.format(letter.symbol.u)}")
        out.add(letter.symbol.r, tuple(g), -1 if letter.inverted else 1)
    return out
