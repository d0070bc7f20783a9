"""Edges and paths of the derivation graph"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Tuple

from ..utils.exceptions import PathError
from ..words import Alphabet, Word
from .system import Rule


@dataclass(frozen=True)
class Edge:
    """
    Quadruple (w, r, e, w'): an application of rule r inside w.r.w'.

    ι = w.r_e.w' and τ = w.r_{-e}.w'. Equality is structural, so rules with
    equal words but different ids give different edges.
    """

    left: Word
    rule: Rule
    sign: int
    right: Word

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PathError(f"edge sign must be +1 or -1, got {self.sign}")

    @property
    def initial(self) -> Word:
        return self.left + self.rule.side(self.sign) + self.right

    @property
    def terminal(self) -> Word:
        return self.left + self.rule.side(-self.sign) + self.right

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def inverse(self) -> 'Edge':
        return Edge(self.left, self.rule, -self.sign, self.right)

    def positive(self) -> 'Edge':
        return self if self.sign > 0 else self.inverse()

    def translate(self, z: Word = (), z2: Word = ()) -> 'Edge':
        """z.e.z' = (z w, r, e, w' z')"""
        if not z and not z2:
            return self
        return Edge(tuple(z) + self.left, self.rule, self.sign, self.right + tuple(z2))

    def sort_key(self, alphabet: Alphabet):
        return (alphabet.sort_key(self.initial), -len(self.right), self.rule.id, self.sign)

    def __str__(self):
        sign = '+1' if self.sign > 0 else '-1'
        return (f"({Alphabet.format(self.left)}, {self.rule.id}, {sign}, "
                f"{Alphabet.format(self.right)})")


def endpoints(e: Edge) -> Tuple[Word, Word]:
    return e.initial, e.terminal


@dataclass(frozen=True)
class Path:
    """Composable sequence of edges; `base` is the start vertex (kept for empty paths)"""

    base: Word
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        at = self.base
        for i, e in enumerate(self.edges):
            if e.initial != at:
                raise PathError(f"edge {i} starts at {Alphabet.format(e.initial)}, "
                                f"expected {Alphabet.format(at)}")
            at = e.terminal

    @classmethod
    def of(cls, edges: Iterable[Edge], base: Word = None) -> 'Path':
        edges = tuple(edges)
        if base is None:
            if not edges:
                raise PathError("an empty path needs an explicit base vertex")
            base = edges[0].initial
        return cls(tuple(base), edges)

    @classmethod
    def empty(cls, w: Word) -> 'Path':
        return cls(tuple(w), ())

    @property
    def initial(self) -> Word:
        return self.base

    @property
    def terminal(self) -> Word:
        return self.edges[-1].terminal if self.edges else self.base

    @property
    def is_closed(self) -> bool:
        return self.initial == self.terminal

    @property
    def is_positive(self) -> bool:
        return all(e.sign > 0 for e in self.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def then(self, other: 'Path') -> 'Path':
        """Composition self ∘ other (self first)"""
        if self.terminal != other.initial:
            raise PathError(f"cannot compose: {Alphabet.format(self.terminal)} != "
                            f"{Alphabet.format(other.initial)}")
        return Path(self.base, self.edges + other.edges)

    def inverse(self) -> 'Path':
        return Path(self.terminal, tuple(e.inverse() for e in reversed(self.edges)))

    def translate(self, z: Word = (), z2: Word = ()) -> 'Path':
        return Path(tuple(z) + self.base + tuple(z2), tuple(e.translate(z, z2) for e in self.edges))

    def vertices(self) -> List[Word]:
        out = [self.base]
        for e in self.edges:
            out.append(e.terminal)
        return out

    def __str__(self):
        if not self.edges:
            return f"<empty at {Alphabet.format(self.base)}>"
        return ' ∘ '.join(str(e) for e in self.edges)


def compose(*paths: Path) -> Path:
    result = paths[0]
    for p in paths[1:]:
        result = result.then(p)
    return result
