"""Integer chains: finitely supported formal sums of cells"""

from typing import Dict, Iterable, Iterator, Tuple

from ..rewriting import Edge, Path


def translate_cell(z, cell, z2):
    """Two-sided action on a cell of any dimension (words are 0-cells)"""
    if isinstance(cell, tuple):
        return tuple(z) + cell + tuple(z2)
    return cell.translate(z, z2)


def cell_extent(cell) -> int:
    """Length of the longest vertex word in the closure of a cell"""
    if isinstance(cell, tuple):
        return len(cell)
    if isinstance(cell, Edge):
        return max(len(cell.initial), len(cell.terminal))
    return cell.extent


class Chain:
    """
    Element of C_k: cell -> nonzero integer coefficient.

    Cells are the objects themselves (words, positive edges, 2-cells,
    3-cells); a host complex maps them to matrix indices.
    """

    __slots__ = ('dimension', '_terms')

    def __init__(self, dimension: int, terms=None):
        self.dimension = dimension
        self._terms: Dict[object, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for cell, coef in items:
                self._add(cell, coef)

    @classmethod
    def zero(cls, dimension: int) -> 'Chain':
        return cls(dimension)

    @classmethod
    def of(cls, dimension: int, cell, coef: int = 1) -> 'Chain':
        return cls(dimension, [(cell, coef)])

    def _add(self, cell, coef):
        if not coef:
            return
        value = self._terms.get(cell, 0) + coef
        if value:
            self._terms[cell] = value
        else:
            del self._terms[cell]

    def copy(self) -> 'Chain':
        out = Chain(self.dimension)
        out._terms = dict(self._terms)
        return out

    def add_term(self, cell, coef: int) -> 'Chain':
        """In-place accumulation; returns self"""
        self._add(cell, coef)
        return self

    def coefficient(self, cell) -> int:
        return self._terms.get(cell, 0)

    def items(self) -> Iterator[Tuple[object, int]]:
        return iter(self._terms.items())

    def support(self):
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and self._terms == other._terms

    def __hash__(self):
        return hash((self.dimension, frozenset(self._terms.items())))

    def _check(self, other):
        if other.dimension != self.dimension:
            raise ValueError(f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other: 'Chain') -> 'Chain':
        self._check(other)
        out = self.copy()
        for cell, coef in other.items():
            out._add(cell, coef)
        return out

    def __sub__(self, other: 'Chain') -> 'Chain':
        self._check(other)
        out = self.copy()
        for cell, coef in other.items():
            out._add(cell, -coef)
        return out

    def __neg__(self) -> 'Chain':
        return Chain(self.dimension, {c: -k for c, k in self._terms.items()})

    def __mul__(self, scalar: int) -> 'Chain':
        if not scalar:
            return Chain(self.dimension)
        return Chain(self.dimension, {c: scalar * k for c, k in self._terms.items()})

    __rmul__ = __mul__

    def translate(self, z=(), z2=()) -> 'Chain':
        out = Chain(self.dimension)
        for cell, coef in self._terms.items():
            out._add(translate_cell(z, cell, z2), coef)
        return out

    def extent(self) -> int:
        return max((cell_extent(c) for c in self._terms), default=0)

    def __repr__(self):
        body = ' + '.join(f"{k}*{c}" for c, k in self._terms.items()) or '0'
        return f"Chain[{self.dimension}]({body})"


def chain_sum(dimension: int, chains: Iterable[Chain]) -> Chain:
    out = Chain(dimension)
    for chain in chains:
        for cell, coef in chain.items():
            out.add_term(cell, coef)
    return out


def chain_of_path(path: Path) -> Chain:
    """Signed sum of the positive edges underlying a path"""
    out = Chain(1)
    for e in path:
        out.add_term(e.positive(), e.sign)
    return out
