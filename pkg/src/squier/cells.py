"""2-cells and 3-cells of the extended complex"""

from dataclasses import dataclass, field
from functools import cached_property
from enum import Enum
from typing import Optional, Tuple

from ..rewriting import Edge, Path
from ..utils.exceptions import ComplexError, PathError
from ..words import Alphabet, Word


@dataclass(frozen=True, eq=False)
class LoopDef:
    """
    A closed path along which 2-cells [u, p, v] are attached.

    Identity is the id alone, so the same loop built twice compares equal.
    `critical_pair` holds the two positive edges leaving the loop's peak
    (its llex-largest vertex); cell naming uses it.
    """

    id: str
    kind: str
    path: Path
    critical_pair: Optional[Tuple[Edge, Edge]] = None
    params: Tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.path.is_closed:
            raise PathError(f"loop {self.id!r} is not closed")

    def __eq__(self, other):
        return isinstance(other, LoopDef) and other.id == self.id

    def __hash__(self):
        return hash(('loop', self.id))

    @cached_property
    def extent(self) -> int:
        return max(len(v) for v in self.path.vertices())

    def peak(self, alphabet: Alphabet) -> Word:
        return max(self.path.vertices(), key=alphabet.sort_key)

    def peak_edges(self, alphabet: Alphabet) -> Tuple[Edge, Edge]:
        if self.critical_pair is not None:
            return self.critical_pair
        return loop_peak_edges(self.path, alphabet)

    def __str__(self):
        return self.id


def loop_peak_edges(path: Path, alphabet: Alphabet) -> Tuple[Edge, Edge]:
    """Positive edges leaving the peak of a closed path, in path order"""
    top = max(path.vertices(), key=alphabet.sort_key)
    found = []
    for e in path:
        if e.sign > 0 and e.initial == top:
            found.append(e)
        elif e.sign < 0 and e.terminal == top:
            found.append(e.inverse())
    unique = list(dict.fromkeys(found))
    if len(unique) != 2:
        raise ComplexError(f"loop peak {Alphabet.format(top)} has {len(unique)} incident edges, expected 2")
    return unique[0], unique[1]


@dataclass(frozen=True)
class SquareCell:
    """
    [e, f] for positive edges; canonical with e.right empty, since
    [e.z, f] and [e, z.f] have the same boundary.
    """

    e: Edge
    f: Edge

    def __post_init__(self):
        if self.e.sign < 0 or self.f.sign < 0:
            raise ComplexError("square cells need positive edges")
        if self.e.right:
            raise ComplexError("square cell not canonical; build it with square()")

    @property
    def max_vertex(self) -> Word:
        return self.e.initial + self.f.initial

    @property
    def right_word(self) -> Word:
        return self.f.right

    @property
    def extent(self) -> int:
        e, f = self.e, self.f
        return max(len(e.initial), len(e.terminal)) + max(len(f.initial), len(f.terminal))

    def translate(self, z=(), z2=()) -> 'SquareCell':
        if not z and not z2:
            return self
        return SquareCell(self.e.translate(z, ()), self.f.translate((), z2))

    def boundary_path(self) -> Path:
        """(e.ιf)(τe.f)(e.τf)^-1(ιe.f)^-1"""
        e, f = self.e, self.f
        return Path.of([
            e.translate((), f.initial),
            f.translate(e.terminal, ()),
            e.translate((), f.terminal).inverse(),
            f.translate(e.initial, ()).inverse(),
        ])

    def __str__(self):
        return f"[{self.e}, {self.f}]"


def square(e: Edge, f: Edge) -> SquareCell:
    """Canonical square cell: moves e's right context onto f's left"""
    e, f = e.positive(), f.positive()
    if e.right:
        f = f.translate(e.right, ())
        e = Edge(e.left, e.rule, 1, ())
    return SquareCell(e, f)


@dataclass(frozen=True)
class PCell:
    """[u, p, v]: the loop p translated to u.p.v"""

    left: Word
    loop: LoopDef
    right: Word

    @property
    def right_word(self) -> Word:
        return self.right

    @property
    def extent(self) -> int:
        return len(self.left) + self.loop.extent + len(self.right)

    def max_vertex(self, alphabet: Alphabet) -> Word:
        return self.left + self.loop.peak(alphabet) + self.right

    def translate(self, z=(), z2=()) -> 'PCell':
        if not z and not z2:
            return self
        return PCell(tuple(z) + self.left, self.loop, self.right + tuple(z2))

    def boundary_path(self) -> Path:
        return self.loop.path.translate(self.left, self.right)

    def __str__(self):
        return f"[{Alphabet.format(self.left)}, {self.loop.id}, {Alphabet.format(self.right)}]"


def strip_right(cell):
    """Split a 2-cell into (cell with empty right translation, that right word)"""
    if isinstance(cell, SquareCell):
        w = cell.f.right
        if not w:
            return cell, ()
        return SquareCell(cell.e, Edge(cell.f.left, cell.f.rule, 1, ())), w
    w = cell.right
    if not w:
        return cell, ()
    return PCell(cell.left, cell.loop, ()), w


def two_cell_max_vertex(cell, alphabet: Alphabet) -> Word:
    if isinstance(cell, SquareCell):
        return cell.max_vertex
    return cell.max_vertex(alphabet)


class Orientation(Enum):
    EDGE_FIRST = 'edge_first'    # [f, σ]
    CELL_FIRST = 'cell_first'    # [σ, f]


@dataclass(frozen=True)
class ThreeCell:
    """
    [f, σ] or [σ, f]. Canonical: for [f, σ] the edge has empty right part,
    for [σ, f] the 2-cell has empty right translation.
    """

    orientation: Orientation
    edge: Edge
    cell: object

    def __post_init__(self):
        if self.edge.sign < 0:
            raise ComplexError("3-cells need a positive edge")
        if self.orientation is Orientation.EDGE_FIRST and self.edge.right:
            raise ComplexError("3-cell not canonical; build it with edge_first()")
        if self.orientation is Orientation.CELL_FIRST and self.cell.right_word:
            raise ComplexError("3-cell not canonical; build it with cell_first()")

    @property
    def extent(self) -> int:
        return max(len(self.edge.initial), len(self.edge.terminal)) + self.cell.extent

    def translate(self, z=(), z2=()) -> 'ThreeCell':
        if not z and not z2:
            return self
        if self.orientation is Orientation.EDGE_FIRST:
            return ThreeCell(self.orientation, self.edge.translate(z, ()), self.cell.translate((), z2))
        return ThreeCell(self.orientation, self.edge.translate((), z2), self.cell.translate(z, ()))

    def max_vertex(self, alphabet: Alphabet) -> Word:
        inner = two_cell_max_vertex(self.cell, alphabet)
        if self.orientation is Orientation.EDGE_FIRST:
            return self.edge.initial + inner
        return inner + self.edge.initial

    def __str__(self):
        if self.orientation is Orientation.EDGE_FIRST:
            return f"[{self.edge}, {self.cell}]"
        return f"[{self.cell}, {self.edge}]"


def edge_first(f: Edge, sigma) -> ThreeCell:
    """Canonical [f, σ]"""
    f = f.positive()
    if f.right:
        sigma = sigma.translate(f.right, ())
        f = Edge(f.left, f.rule, 1, ())
    return ThreeCell(Orientation.EDGE_FIRST, f, sigma)


def cell_first(sigma, f: Edge) -> ThreeCell:
    """Canonical [σ, f]"""
    sigma, w = strip_right(sigma)
    return ThreeCell(Orientation.CELL_FIRST, f.positive().translate(w, ()), sigma)
