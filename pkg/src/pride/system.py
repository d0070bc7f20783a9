"""
The monoid presentation ⟨𝐱, 𝐱⁻¹ : 𝐬⟩ of a group presentation

𝐬 holds r^ε -> 1 for every relator and sign, then x^ε x^-ε -> 1 for every
generator and sign. Rule ids are derived from labels, so a subpresentation
yields literally the same rules.
"""

from dataclasses import dataclass
from typing import Dict, Union

from ..rewriting import Rule, RewritingSystem
from ..utils.exceptions import PresentationError
from ..words import Word
from .presentation import GroupPresentation


TRIVIAL_PREFIX = 't:'


@dataclass(frozen=True)
class Relator:
    label: str
    sign: int


@dataclass(frozen=True)
class Trivial:
    generator: str
    sign: int


RuleTag = Union[Relator, Trivial]


def _sign_suffix(sign: int) -> str:
    return '+' if sign > 0 else '-'


def relator_rule_id(label: str, sign: int) -> str:
    return f"{label}{_sign_suffix(sign)}"


def trivial_rule_id(generator: str, sign: int) -> str:
    return f"{TRIVIAL_PREFIX}{generator}{_sign_suffix(sign)}"


class PrideSystem:
    """A group presentation's monoid rewriting system with each rule tagged"""

    def __init__(self, presentation: GroupPresentation):
        self.presentation = presentation
        self.alphabet = presentation.alphabet
        rules = []
        self.tags: Dict[str, RuleTag] = {}
        for label, word in presentation.relators:
            for sign in (1, -1):
                lhs = word if sign > 0 else presentation.inverse(word)
                rule = Rule(relator_rule_id(label, sign), lhs, ())
                rules.append(rule)
                self.tags[rule.id] = Relator(label, sign)
        for x in presentation.generators:
            x_inv = self.alphabet.inverse_letter(x)
            for sign, lhs in ((1, (x, x_inv)), (-1, (x_inv, x))):
                rule = Rule(trivial_rule_id(x, sign), lhs, ())
                rules.append(rule)
                self.tags[rule.id] = Trivial(x, sign)
        self.system = RewritingSystem(self.alphabet, rules, name=presentation.name)

        # letter a -> rule a a^-1 -> 1
        self._cancel: Dict[str, Rule] = {}
        for x in presentation.generators:
            x_inv = self.alphabet.inverse_letter(x)
            self._cancel[x] = self.system.rule(trivial_rule_id(x, 1))
            self._cancel[x_inv] = self.system.rule(trivial_rule_id(x, -1))

    def __repr__(self):
        return f"PrideSystem({self.presentation!r}, {len(self.system)} rules)"

    def tag(self, rule: Union[Rule, str]) -> RuleTag:
        rule_id = rule if isinstance(rule, str) else rule.id
        try:
            return self.tags[rule_id]
        except KeyError:
            raise PresentationError(f"rule {rule_id!r} is not part of this Pride system") from None

    def relator_rule(self, label: str, sign: int = 1) -> Rule:
        self.presentation.relator(label)
        return self.system.rule(relator_rule_id(label, sign))

    def cancel_rule(self, letter: str) -> Rule:
        """The trivial rule with lhs letter.letter⁻¹"""
        return self._cancel[letter]

    def trivial_rule(self, generator: str, sign: int) -> Rule:
        """Rule x^ε x^-ε -> 1"""
        return self.system.rule(trivial_rule_id(generator, sign))

    def letter(self, generator: str, sign: int) -> str:
        return generator if sign > 0 else self.alphabet.inverse_letter(generator)

    def is_trivial(self, rule: Rule) -> bool:
        return isinstance(self.tag(rule), Trivial)

    def inverse(self, w: Word) -> Word:
        return self.alphabet.formal_inverse(w)


def to_pride_system(presentation: GroupPresentation) -> PrideSystem:
    return PrideSystem(presentation)
