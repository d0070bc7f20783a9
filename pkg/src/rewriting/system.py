"""Rules and rewriting systems"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.exceptions import RuleError
from ..words import Alphabet, Ordering, Word


@dataclass(frozen=True)
class Rule:
    """An oriented rule lhs -> rhs with a stable id"""

    id: str
    lhs: Word
    rhs: Word

    def __hash__(self):
        return hash(self.id)

    def side(self, sign: int) -> Word:
        """r_{+1} is the lhs, r_{-1} the rhs"""
        return self.lhs if sign > 0 else self.rhs

    def __str__(self):
        return f"{Alphabet.format(self.lhs)} -> {Alphabet.format(self.rhs)}"


class RewritingSystem:
    """
    Finite list of rules over an alphabet.

    Rule order is significant: "lowest rule id" in the reduction strategy
    means earliest in this list.
    """

    def __init__(self, alphabet: Alphabet, rules: Iterable[Rule], name: Optional[str] = None):
        """
        Args:
            alphabet: Alphabet all rule words live over
            rules: Rules, in priority order
            name: Optional label used in logs and reports
        """
        self.alphabet = alphabet
        self.rules: Tuple[Rule, ...] = tuple(rules)
        self.name = name

        self._by_id: Dict[str, Rule] = {}
        self._position: Dict[str, int] = {}
        seen_pairs = set()
        for i, rule in enumerate(self.rules):
            if rule.id in self._by_id:
                raise RuleError(f"duplicate rule id {rule.id!r}")
            alphabet.validate(rule.lhs)
            alphabet.validate(rule.rhs)
            if rule.lhs == rule.rhs:
                raise RuleError(f"rule {rule.id!r} has equal sides")
            if not rule.lhs:
                raise RuleError(f"rule {rule.id!r} has an empty left-hand side")
            if (rule.lhs, rule.rhs) in seen_pairs:
                raise RuleError(f"rule {rule.id!r} duplicates an earlier (lhs, rhs)")
            seen_pairs.add((rule.lhs, rule.rhs))
            self._by_id[rule.id] = rule
            self._position[rule.id] = i

        # first letter -> rules whose lhs starts with it, in priority order
        self._by_first: Dict[str, List[Rule]] = {}
        for rule in self.rules:
            self._by_first.setdefault(rule.lhs[0], []).append(rule)

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Sequence[Tuple[Word, Word]],
                   prefix: str = 'r', name: Optional[str] = None) -> 'RewritingSystem':
        """Build a system with ids prefix1, prefix2, ..."""
        rules = [Rule(f"{prefix}{i}", tuple(lhs), tuple(rhs)) for i, (lhs, rhs) in enumerate(pairs, 1)]
        return cls(alphabet, rules, name=name)

    def __len__(self):
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __repr__(self):
        body = ', '.join(f"{r.id}: {r}" for r in self.rules)
        return f"RewritingSystem({body})"

    def rule(self, rule_id: str) -> Rule:
        try:
            return self._by_id[rule_id]
        except KeyError:
            raise RuleError(f"unknown rule id {rule_id!r}") from None

    def has_rule(self, rule_id: str) -> bool:
        return rule_id in self._by_id

    def priority(self, rule_id: str) -> int:
        return self._position[rule_id]

    @property
    def max_lhs_len(self) -> int:
        return max((len(r.lhs) for r in self.rules), default=0)

    def rule_pairs(self) -> List[Tuple[Word, Word]]:
        return [(r.lhs, r.rhs) for r in self.rules]

    def with_rules(self, extra: Iterable[Rule], name: Optional[str] = None) -> 'RewritingSystem':
        return RewritingSystem(self.alphabet, self.rules + tuple(extra), name=name or self.name)

    def subsystem(self, rule_ids: Iterable[str], name: Optional[str] = None) -> 'RewritingSystem':
        keep = set(rule_ids)
        return RewritingSystem(self.alphabet, [r for r in self.rules if r.id in keep], name=name)

    def fresh_id(self, prefix: str = 'k') -> str:
        n = 1
        while f"{prefix}{n}" in self._by_id:
            n += 1
        return f"{prefix}{n}"

    def is_llex_compatible(self) -> bool:
        return all(self.alphabet.compare(r.lhs, r.rhs) is Ordering.GREATER for r in self.rules)

    def matches_at(self, w: Word, position: int) -> Iterator[Rule]:
        """Rules whose lhs occurs in w starting at `position`, in priority order"""
        if position >= len(w):
            return
        for rule in self._by_first.get(w[position], ()):
            n = len(rule.lhs)
            if w[position:position + n] == rule.lhs:
                yield rule

    def matches(self, w: Word) -> Iterator[Tuple[int, Rule]]:
        """All (position, rule) with w = u.lhs.v, ordered by position then priority"""
        for i in range(len(w)):
            for rule in self.matches_at(w, i):
                yield i, rule

    def occurrences_of(self, factor: Word, w: Word) -> Iterator[int]:
        n = len(factor)
        for i in range(len(w) - n + 1):
            if w[i:i + n] == factor:
                yield i
