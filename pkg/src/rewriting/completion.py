"""Knuth-Bendix completion under the length-lexicographic order"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from ..utils.exceptions import NonterminationSuspected
from ..utils.logger import setup_logger
from ..words import Ordering, Word
from .critical_pairs import critical_pairs
from .reduction import DEFAULT_STEP_LIMIT, is_irreducible, normalize
from .system import Rule, RewritingSystem


class CompletionStatus(Enum):
    COMPLETE = 'complete'
    LIMIT_REACHED = 'limit_reached'


@dataclass
class CompletionResult:
    status: CompletionStatus
    system: RewritingSystem
    added_rules: List[Rule] = field(default_factory=list)
    rounds: int = 0
    reason: Optional[str] = None

    @property
    def is_complete(self) -> bool:
        return self.status is CompletionStatus.COMPLETE


class KnuthBendix:
    """
    Round-based completion.

    Each round resolves every critical pair of a frozen snapshot of the rules,
    collects the oriented equations between distinct irreducibles, then adds
    them all at once. Interreduction runs after each round unless disabled.
    """

    def __init__(self, max_rules=200, max_lhs_len=12, interreduce=True,
                 step_limit=DEFAULT_STEP_LIMIT, max_rounds=100):
        """
        Args:
            max_rules: Stop with LIMIT_REACHED beyond this many rules
            max_lhs_len: Stop with LIMIT_REACHED if a longer lhs would be added
            interreduce: Remove rules whose lhs is reducible by the others
            step_limit: Normalization step limit
            max_rounds: Round cap
        """
        self.max_rules = max_rules
        self.max_lhs_len = max_lhs_len
        self.interreduce = interreduce
        self.step_limit = step_limit
        self.max_rounds = max_rounds
        self.logger = setup_logger('KnuthBendix')

    # -- helpers ----------------------------------------------------------

    @staticmethod
    def orient(alphabet, u: Word, v: Word) -> Tuple[Word, Word]:
        if alphabet.compare(u, v) is Ordering.LESS:
            return v, u
        return u, v

    def _fresh_id(self, taken, counter):
        while True:
            counter[0] += 1
            candidate = f"k{counter[0]}"
            if candidate not in taken:
                taken.add(candidate)
                return candidate

    def _ingest(self, system: RewritingSystem) -> List[Rule]:
        rules = []
        for rule in system:
            lhs, rhs = self.orient(system.alphabet, rule.lhs, rule.rhs)
            if (lhs, rhs) != (rule.lhs, rule.rhs):
                self.logger.debug(f"flipping rule {rule.id} to {lhs} -> {rhs}")
            rules.append(Rule(rule.id, lhs, rhs))
        return rules

    def _interreduce(self, alphabet, rules: List[Rule], taken, counter) -> List[Rule]:
        changed = True
        while changed:
            changed = False
            for i, rule in enumerate(rules):
                others = RewritingSystem(alphabet, rules[:i] + rules[i + 1:])
                if is_irreducible(rule.lhs, others):
                    continue
                a = normalize(rule.lhs, others, self.step_limit)
                b = normalize(rule.rhs, others, self.step_limit)
                rules = rules[:i] + rules[i + 1:]
                if a != b:
                    lhs, rhs = self.orient(alphabet, a, b)
                    if all((r.lhs, r.rhs) != (lhs, rhs) for r in rules):
                        rules.append(Rule(self._fresh_id(taken, counter), lhs, rhs))
                changed = True
                break
        # right-hand sides to normal form
        current = RewritingSystem(alphabet, rules)
        reduced = []
        for rule in rules:
            rhs = normalize(rule.rhs, current, self.step_limit)
            reduced.append(Rule(rule.id, rule.lhs, rhs) if rhs != rule.rhs else rule)
        return _dedupe(reduced)

    # -- main loop ----------------------------------------------------------

    def complete(self, system: RewritingSystem) -> CompletionResult:
        """
        Run completion on `system`

        Returns:
            CompletionResult; on COMPLETE every critical pair of the returned
            system is resolvable
        """
        alphabet = system.alphabet
        original_ids = {r.id for r in system}
        taken = set(original_ids)
        counter = [0]
        rules = _dedupe(self._ingest(system))
        rounds = 0

        while True:
            snapshot = RewritingSystem(alphabet, rules, name=system.name)
            new_rules: List[Tuple[Word, Word]] = []
            existing = {(r.lhs, r.rhs) for r in rules}
            try:
                for cp in critical_pairs(snapshot):
                    a = normalize(cp.edge_a.terminal, snapshot, self.step_limit)
                    b = normalize(cp.edge_b.terminal, snapshot, self.step_limit)
                    if a == b:
                        continue
                    pair = self.orient(alphabet, a, b)
                    if pair not in existing:
                        existing.add(pair)
                        new_rules.append(pair)
            except NonterminationSuspected as exc:
                return self._result(CompletionStatus.LIMIT_REACHED, snapshot, original_ids, rounds, str(exc))

            if not new_rules:
                self.logger.info(f"complete after {rounds} rounds with {len(rules)} rules")
                return self._result(CompletionStatus.COMPLETE, snapshot, original_ids, rounds)

            rounds += 1
            too_long = [p for p in new_rules if len(p[0]) > self.max_lhs_len]
            if too_long:
                return self._result(CompletionStatus.LIMIT_REACHED, snapshot, original_ids, rounds,
                                    f"left-hand side longer than {self.max_lhs_len}")
            if len(rules) + len(new_rules) > self.max_rules:
                room = max(self.max_rules - len(rules), 0)
                rules = rules + [Rule(self._fresh_id(taken, counter), l, r) for l, r in new_rules[:room]]
                partial = RewritingSystem(alphabet, rules, name=system.name)
                return self._result(CompletionStatus.LIMIT_REACHED, partial, original_ids, rounds,
                                    f"more than {self.max_rules} rules")

            rules = rules + [Rule(self._fresh_id(taken, counter), l, r) for l, r in new_rules]
            self.logger.debug(f"round {rounds}: +{len(new_rules)} rules")
            if self.interreduce:
                rules = self._interreduce(alphabet, rules, taken, counter)
            if rounds >= self.max_rounds:
                partial = RewritingSystem(alphabet, rules, name=system.name)
                return self._result(CompletionStatus.LIMIT_REACHED, partial, original_ids, rounds,
                                    f"more than {self.max_rounds} rounds")

    @staticmethod
    def _result(status, system, original_ids, rounds, reason=None):
        added = [r for r in system if r.id not in original_ids]
        return CompletionResult(status, system, added, rounds, reason)


def _dedupe(rules: List[Rule]) -> List[Rule]:
    seen = set()
    out = []
    for rule in rules:
        key = (rule.lhs, rule.rhs)
        if key in seen:
            continue
        seen.add(key)
        out.append(rule)
    return out


def knuth_bendix(system: RewritingSystem, max_rules=200, max_lhs_len=12, interreduce=True,
                 step_limit=DEFAULT_STEP_LIMIT) -> CompletionResult:
    return KnuthBendix(max_rules, max_lhs_len, interreduce, step_limit).complete(system)
