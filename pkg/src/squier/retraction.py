"""Retraction of an extended system's edges onto a base system"""

from collections import deque
from typing import Iterator, Optional

from ..rewriting import Edge, Path, RewritingSystem
from ..utils.exceptions import PathError
from ..words import Alphabet, Word
from .chains import Chain, chain_of_path


def thue_edges(w: Word, system: RewritingSystem, length_bound: int) -> Iterator[Edge]:
    """Edges of either sign leaving w whose terminal has length <= length_bound"""
    n = len(w)
    for rule in system:
        for sign in (1, -1):
            src, dst = rule.side(sign), rule.side(-sign)
            k = len(src)
            if n - k + len(dst) > length_bound:
                continue
            for i in range(n - k + 1):
                if w[i:i + k] == src:
                    yield Edge(w[:i], rule, sign, w[i + k:])


def find_replacement_path(e: Edge, base: RewritingSystem, length_bound: int,
                          step_bound: int = 20000) -> Optional[Path]:
    """
    Breadth-first search for a path from ιe to τe in the base derivation graph

    Args:
        e: Edge (usually of an extended system)
        base: System whose edges the path may use
        length_bound: Longest vertex visited
        step_bound: Maximum number of vertices expanded

    Returns:
        Shortest Path, or None when the bounded search fails
    """
    start, goal = e.initial, e.terminal
    if start == goal:
        return Path.empty(start)
    parent = {start: None}
    queue = deque([start])
    expanded = 0
    while queue and expanded < step_bound:
        w = queue.popleft()
        expanded += 1
        for step in thue_edges(w, base, length_bound):
            x = step.terminal
            if x in parent:
                continue
            parent[x] = step
            if x == goal:
                edges = []
                while parent[x] is not None:
                    edges.append(parent[x])
                    x = parent[x].initial
                return Path.of(reversed(edges))
            queue.append(x)
    return None


def retract_edge_chain(e: Edge, replacement: Optional[Path] = None,
                       base: Optional[RewritingSystem] = None) -> Chain:
    """
    ρ̂₁ on one edge: the base edge itself, or the chain of its replacement path

    Raises:
        PathError: replacement missing or with the wrong endpoints
    """
    if base is not None and base.has_rule(e.rule.id) and base.rule(e.rule.id) == e.rule:
        return Chain.of(1, e.positive(), e.sign)
    if replacement is None:
        raise PathError(f"edge {e} needs a replacement path")
    if replacement.initial != e.initial or replacement.terminal != e.terminal:
        raise PathError(f"replacement runs {Alphabet.format(replacement.initial)} -> "
                        f"{Alphabet.format(replacement.terminal)}, edge runs "
                        f"{Alphabet.format(e.initial)} -> {Alphabet.format(e.terminal)}")
    return chain_of_path(replacement)
