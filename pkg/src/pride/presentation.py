"""Group presentations (𝐱, 𝐫)"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..utils.exceptions import PresentationError
from ..words import Alphabet, Word

HAT_SUFFIX = '~'


class GroupPresentation:
    """
    Generators 𝐱 and labelled relators 𝐫 over 𝐱 ∪ 𝐱⁻¹.

    Relators must be nonempty and freely reduced. A relator equal to another
    one or to another's inverse is rejected. `distinguished` names r₀.
    """

    def __init__(self, generators: Sequence[str], relators: Iterable[Tuple[str, Word]],
                 distinguished: Optional[str] = None, name: Optional[str] = None):
        """
        Args:
            generators: Generator tokens x, y, ...
            relators: (label, word) pairs; words over the free-group alphabet
            distinguished: Optional label of r₀
            name: Optional label used in logs and reports
        """
        self.generators: Tuple[str, ...] = tuple(generators)
        self.alphabet = Alphabet.free_group(self.generators)
        self.name = name
        self.relators: List[Tuple[str, Word]] = []
        self._by_label: Dict[str, Word] = {}

        seen = {}
        for label, word in relators:
            word = self.alphabet.validate(word)
            if not word:
                raise PresentationError(f"relator {label!r} is empty")
            if not self.alphabet.is_reduced(word):
                raise PresentationError(f"relator {label!r} is not freely reduced: "
                                        f"{Alphabet.format(word)}")
            if label in self._by_label:
                raise PresentationError(f"duplicate relator label {label!r}")
            if word in seen:
                raise PresentationError(f"relator {label!r} duplicates {seen[word]!r}")
            inverse = self.alphabet.formal_inverse(word)
            if inverse in seen:
                raise PresentationError(f"relator {label!r} is the inverse of {seen[inverse]!r}")
            seen[word] = label
            self.relators.append((label, word))
            self._by_label[label] = word

        if distinguished is not None and distinguished not in self._by_label:
            raise PresentationError(f"distinguished relator {distinguished!r} is not a relator")
        self.distinguished = distinguished

    @classmethod
    def from_words(cls, generators: Sequence[str], words: Iterable[Word],
                   distinguished: Optional[int] = None, name: Optional[str] = None) -> 'GroupPresentation':
        """Label relators r1, r2, ...; `distinguished` is a 1-based position"""
        relators = [(f"r{i}", tuple(w)) for i, w in enumerate(words, 1)]
        label = None
        if distinguished is not None:
            if not 1 <= distinguished <= len(relators):
                raise PresentationError(f"distinguished index {distinguished} out of range")
            label = relators[distinguished - 1][0]
        return cls(generators, relators, label, name)

    @classmethod
    def parse(cls, generators: Sequence[str], relator_texts: Iterable[str], **kwargs) -> 'GroupPresentation':
        alphabet = Alphabet.free_group(generators)
        return cls.from_words(generators, [alphabet.parse(t) for t in relator_texts], **kwargs)

    def __repr__(self):
        body = ', '.join(Alphabet.format(w) for _, w in self.relators)
        return f"<{' '.join(self.generators)} | {body}>"

    def __len__(self):
        return len(self.relators)

    @property
    def labels(self) -> List[str]:
        return [label for label, _ in self.relators]

    def relator(self, label: str) -> Word:
        try:
            return self._by_label[label]
        except KeyError:
            raise PresentationError(f"unknown relator {label!r}") from None

    def label_at(self, index: int) -> str:
        """Label of the relator at a 1-based position"""
        if not 1 <= index <= len(self.relators):
            raise PresentationError(f"relator index {index} out of range")
        return self.relators[index - 1][0]

    def has_relator(self, label: str) -> bool:
        return label in self._by_label

    def inverse(self, w: Word) -> Word:
        return self.alphabet.formal_inverse(w)

    def subpresentation(self) -> 'GroupPresentation':
        """𝒫₁ = (𝐱, 𝐫 ∖ {r₀}), keeping labels"""
        if self.distinguished is None:
            raise PresentationError("no distinguished relator r0 is set")
        kept = [(label, w) for label, w in self.relators if label != self.distinguished]
        return GroupPresentation(self.generators, kept, name=f"{self.name or 'P'}_1")

    def doubled(self) -> 'GroupPresentation':
        """
        Relators 𝐫 ∪ 𝐫⁻¹, the inverse of r labelled r~. Built directly since
        the constructor refuses inverse duplicates.
        """
        out = GroupPresentation(self.generators, self.relators, self.distinguished, self.name)
        for label, w in self.relators:
            hat = label + HAT_SUFFIX
            out.relators.append((hat, self.inverse(w)))
            out._by_label[hat] = self.inverse(w)
        return out
