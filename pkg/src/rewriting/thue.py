"""Bounded search in the Thue congruence"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ..utils.union_find import UnionFind
from ..words import Word
from .system import RewritingSystem


@dataclass(frozen=True)
class Equivalent:
    """Definitive: `chain` is a sequence of words, each one rule application from the next"""

    chain: Tuple[Word, ...]


@dataclass(frozen=True)
class NotFoundWithinBound:
    """Inconclusive: the bounded search ran out"""

    explored: int
    exhausted: bool


def thue_neighbours(w: Word, system: RewritingSystem, length_bound: int) -> Iterator[Word]:
    """Words one rule application away, in either direction, within the length bound"""
    n = len(w)
    for rule in system:
        for lhs, rhs in ((rule.lhs, rule.rhs), (rule.rhs, rule.lhs)):
            k = len(lhs)
            if n - k + len(rhs) > length_bound:
                continue
            for i in range(n - k + 1):
                if w[i:i + k] == lhs:
                    yield w[:i] + rhs + w[i + k:]


def thue_oracle(u: Word, v: Word, system: RewritingSystem, length_bound: int = 12,
                step_bound: int = 20000):
    """
    Bidirectional breadth-first search for u <->* v

    Args:
        u, v: Words
        system: Rules used in both directions
        length_bound: Largest word visited
        step_bound: Maximum number of word expansions

    Returns:
        Equivalent(chain) or NotFoundWithinBound
    """
    u, v = tuple(u), tuple(v)
    if u == v:
        return Equivalent((u,))
    parents = ({u: None}, {v: None})
    frontiers = (deque([u]), deque([v]))
    explored = 0
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        frontier, seen, other = frontiers[side], parents[side], parents[1 - side]
        for _ in range(len(frontier)):
            w = frontier.popleft()
            explored += 1
            if explored > step_bound:
                return NotFoundWithinBound(explored, exhausted=False)
            for x in thue_neighbours(w, system, length_bound):
                if x in seen:
                    continue
                seen[x] = w
                if x in other:
                    return Equivalent(_join(x, parents, side))
                frontier.append(x)
    return NotFoundWithinBound(explored, exhausted=True)


def _join(meet: Word, parents, side: int) -> Tuple[Word, ...]:
    def trace(start, table):
        out = []
        while start is not None:
            out.append(start)
            start = table[start]
        return out

    from_side = trace(meet, parents[side])[::-1]
    to_other = trace(parents[1 - side][meet], parents[1 - side]) if parents[1 - side][meet] is not None else []
    chain = from_side + to_other
    if side == 1:
        chain.reverse()
    return tuple(chain)


def congruence_classes(system: RewritingSystem, length: int, closure_length: Optional[int] = None) -> List[List[Word]]:
    """
    Thue classes of the words of length <= `length`

    Connections are searched among words of length <= closure_length
    (default: length + max lhs length), so classes joined only through
    longer words may appear split.
    """
    if closure_length is None:
        closure_length = length + system.max_lhs_len
    uf = UnionFind()
    for w in system.alphabet.words_up_to(closure_length):
        uf.add(w)
        for x in thue_neighbours(w, system, closure_length):
            uf.union(w, x)
    groups: Dict[Word, List[Word]] = {}
    for w in system.alphabet.words_up_to(length):
        groups.setdefault(uf.find(w), []).append(w)
    return list(groups.values())
