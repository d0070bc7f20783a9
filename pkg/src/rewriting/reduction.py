"""Single-step rewriting and normalization"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

from ..utils.exceptions import NonterminationSuspected
from ..words import Word
from .edges import Edge, Path
from .system import RewritingSystem


DEFAULT_STEP_LIMIT = 10000


@dataclass(frozen=True)
class Rewrite:
    rule_id: str
    position: int
    result: Word


def single_step_rewrites(w: Word, system: RewritingSystem) -> List[Rewrite]:
    """
    Every one-step reduct of w, ordered by position then rule priority

    Args:
        w: Word to rewrite
        system: Rewriting system

    Returns:
        List of Rewrite(rule_id, position, result)
    """
    out = []
    for i, rule in system.matches(w):
        out.append(Rewrite(rule.id, i, w[:i] + rule.rhs + w[i + len(rule.lhs):]))
    return out


def reduction_edges(w: Word, system: RewritingSystem) -> List[Edge]:
    """Positive edges leaving w"""
    return [Edge(w[:i], rule, 1, w[i + len(rule.lhs):]) for i, rule in system.matches(w)]


def is_irreducible(w: Word, system: RewritingSystem) -> bool:
    for _ in system.matches(w):
        return False
    return True


def _leftmost_step(w: Word, system: RewritingSystem, start: int):
    for i in range(start, len(w)):
        for rule in system.matches_at(w, i):
            return i, rule
    return None


def _rightmost_step(w: Word, system: RewritingSystem):
    for i in range(len(w) - 1, -1, -1):
        for rule in system.matches_at(w, i):
            return i, rule
    return None


def normalize_path(w: Word, system: RewritingSystem, step_limit: int = DEFAULT_STEP_LIMIT,
                   strategy: str = 'leftmost') -> Path:
    """
    Positive path from w to an irreducible word

    Leftmost position first, then lowest rule priority. After a rewrite at
    position p only positions >= p - max_lhs_len + 1 can newly match.

    Raises:
        NonterminationSuspected: after step_limit steps
    """
    w = tuple(w)
    edges = []
    start = 0
    back = max(system.max_lhs_len - 1, 0)
    while True:
        if strategy == 'leftmost':
            step = _leftmost_step(w, system, start)
        else:
            step = _rightmost_step(w, system)
        if step is None:
            break
        if len(edges) >= step_limit:
            raise NonterminationSuspected(w, step_limit)
        i, rule = step
        edge = Edge(w[:i], rule, 1, w[i + len(rule.lhs):])
        edges.append(edge)
        w = edge.terminal
        start = max(0, i - back)
    return Path(edges[0].initial if edges else w, tuple(edges))


def normalize(w: Word, system: RewritingSystem, step_limit: int = DEFAULT_STEP_LIMIT,
              strategy: str = 'leftmost') -> Word:
    """Irreducible descendant of w under the given strategy"""
    return normalize_path(w, system, step_limit, strategy).terminal


class NormalFormExplorer:
    """
    Exhaustive rewriting: every irreducible word reachable from a start word.

    Memoised across calls, so scanning all words up to a bound shares work.
    """

    def __init__(self, system: RewritingSystem, step_limit: int = DEFAULT_STEP_LIMIT):
        self.system = system
        self.step_limit = step_limit
        self._memo: Dict[Word, FrozenSet[Word]] = {}

    def normal_forms(self, w: Word) -> FrozenSet[Word]:
        w = tuple(w)
        if w in self._memo:
            return self._memo[w]
        # iterative post-order DFS; a successor already on the current branch is a cycle
        branch = [w]
        on_branch = {w}
        successors: Dict[Word, List[Word]] = {}
        visited = 0
        while branch:
            top = branch[-1]
            if top not in successors:
                successors[top] = [r.result for r in single_step_rewrites(top, self.system)]
                visited += 1
                if visited > self.step_limit * 100:
                    raise NonterminationSuspected(w, visited)
            nxt = next((s for s in successors[top] if s not in self._memo), None)
            if nxt is None:
                succ = successors[top]
                if succ:
                    self._memo[top] = frozenset().union(*(self._memo[s] for s in succ))
                else:
                    self._memo[top] = frozenset([top])
                branch.pop()
                on_branch.discard(top)
                continue
            if nxt in on_branch:
                raise NonterminationSuspected(nxt, visited)
            branch.append(nxt)
            on_branch.add(nxt)
        return self._memo[w]

    def unique_normal_form(self, w: Word) -> Optional[Word]:
        forms = self.normal_forms(w)
        return next(iter(forms)) if len(forms) == 1 else None
