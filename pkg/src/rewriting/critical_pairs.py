"""Critical pairs, their resolution, and confluence checks"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..utils.exceptions import NonterminationSuspected
from ..words import Word
from .edges import Edge, Path
from .reduction import DEFAULT_STEP_LIMIT, NormalFormExplorer, normalize_path
from .system import RewritingSystem


class PairKind(Enum):
    INCLUSION = 'inclusion'
    OVERLAP = 'overlap'


@dataclass(frozen=True)
class CriticalPair:
    """Two positive edges leaving `overlap_word` whose redexes overlap"""

    kind: PairKind
    overlap_word: Word
    edge_a: Edge
    edge_b: Edge

    def unordered(self):
        return frozenset((self.edge_a, self.edge_b))


def _pair_key(edge_a: Edge, edge_b: Edge):
    return frozenset((edge_a, edge_b))


def critical_pairs(system: RewritingSystem) -> List[CriticalPair]:
    """
    All inclusion and overlap critical pairs of the system

    Pairs are unordered: (a, b) and (b, a) are reported once, with edge_a the
    edge whose rule comes first. Sorted by (overlap word llex, rule priorities).
    """
    found = {}
    rules = system.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # r2's lhs is a factor of r1's lhs
            if len(l2) <= len(l1):
                for p in system.occurrences_of(l2, l1):
                    if r1 is r2 and p == 0:
                        continue
                    a = Edge((), r1, 1, ())
                    b = Edge(l1[:p], r2, 1, l1[p + len(l2):])
                    _record(found, system, PairKind.INCLUSION, l1, a, b)
            # proper overlap: suffix of l1 of length k equals prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    a = Edge((), r1, 1, l2[k:])
                    b = Edge(l1[:-k], r2, 1, ())
                    _record(found, system, PairKind.OVERLAP, word, a, b)
    alphabet = system.alphabet
    return sorted(found.values(), key=lambda cp: (
        alphabet.sort_key(cp.overlap_word),
        system.priority(cp.edge_a.rule.id),
        system.priority(cp.edge_b.rule.id),
        len(cp.edge_b.left),
    ))


def _record(found, system, kind, word, a, b):
    if a == b:
        return
    key = _pair_key(a, b)
    if key in found:
        return
    if (system.priority(b.rule.id), len(b.left)) < (system.priority(a.rule.id), len(a.left)):
        a, b = b, a
    found[key] = CriticalPair(kind, word, a, b)


@dataclass(frozen=True)
class Resolvable:
    """Positive paths from both reducts to a common vertex"""

    path_a: Path
    path_b: Path

    @property
    def common(self) -> Word:
        return self.path_a.terminal


@dataclass(frozen=True)
class Unresolved:
    """Distinct irreducible descendants of the two reducts"""

    normal_a: Word
    normal_b: Word


@dataclass(frozen=True)
class Unknown:
    reason: str


def is_resolvable(cp: CriticalPair, system: RewritingSystem, depth: int = DEFAULT_STEP_LIMIT):
    """
    Try to resolve a critical pair by normalizing both reducts (leftmost strategy)

    Returns:
        Resolvable, Unresolved, or Unknown when either normalization exceeds depth
    """
    try:
        pa = normalize_path(cp.edge_a.terminal, system, depth)
        pb = normalize_path(cp.edge_b.terminal, system, depth)
    except NonterminationSuspected as exc:
        return Unknown(str(exc))
    if pa.terminal == pb.terminal:
        return Resolvable(pa, pb)
    return Unresolved(pa.terminal, pb.terminal)


def unresolved_pairs(system: RewritingSystem, depth: int = DEFAULT_STEP_LIMIT) -> List[Tuple[CriticalPair, object]]:
    out = []
    for cp in critical_pairs(system):
        verdict = is_resolvable(cp, system, depth)
        if not isinstance(verdict, Resolvable):
            out.append((cp, verdict))
    return out


def is_complete(system: RewritingSystem, depth: int = DEFAULT_STEP_LIMIT) -> bool:
    """llex-compatible (so noetherian) with every critical pair resolvable"""
    return system.is_llex_compatible() and not unresolved_pairs(system, depth)


@dataclass(frozen=True)
class ConfluentOnBound:
    words_checked: int


@dataclass(frozen=True)
class CounterexampleFound:
    word: Word
    normal_forms: Tuple[Word, ...]


def newman_confluence_check(system: RewritingSystem, word_length_bound: int,
                            step_limit: int = DEFAULT_STEP_LIMIT):
    """
    Exhaustive confluence check on all words up to the bound

    Every word must reach exactly one irreducible word; the first word (llex)
    with several is reported.

    Raises:
        NonterminationSuspected: when some word does not terminate within step_limit
    """
    alphabet = system.alphabet
    for w in alphabet.words_up_to(word_length_bound):
        normalize_path(w, system, step_limit)
    explorer = NormalFormExplorer(system, step_limit)
    checked = 0
    for w in alphabet.words_up_to(word_length_bound):
        forms = explorer.normal_forms(w)
        checked += 1
        if len(forms) > 1:
            return CounterexampleFound(w, tuple(sorted(forms, key=alphabet.sort_key)))
    return ConfluentOnBound(checked)


def resolution_path(cp: CriticalPair, system: RewritingSystem, depth: int = DEFAULT_STEP_LIMIT) -> Optional[Tuple[Path, Path]]:
    verdict = is_resolvable(cp, system, depth)
    if isinstance(verdict, Resolvable):
        return verdict.path_a, verdict.path_b
    return None
