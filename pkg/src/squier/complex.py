"""Finite truncations of the extended Squier complex"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from ..homology.matrix import BoundaryMatrix
from ..rewriting import Edge, RewritingSystem, reduction_edges
from ..utils.exceptions import ComplexError, ResourceLimitError
from ..utils.helpers import progress
from ..utils.logger import setup_logger
from ..utils.union_find import UnionFind
from ..words import Word
from .boundaries import boundary, three_cell_faces
from .cells import LoopDef, PCell, SquareCell, ThreeCell, edge_first, cell_first, square, two_cell_max_vertex
from .chains import Chain


DEFAULT_MAX_CELLS = 2_000_000
DEFAULT_MARGIN = 2


class TruncatedComplex:
    """
    Cells of (𝒟, 𝐩) whose closure lies in words of length <= L

    Cell lists are fixed after construction; index k gives the column/row
    numbering used by boundary_matrix(k).
    """

    def __init__(self, system: RewritingSystem, length_bound: int, loops: Sequence[LoopDef],
                 cells: Mapping[int, List], margin: int = DEFAULT_MARGIN):
        self.system = system
        self.alphabet = system.alphabet
        self.length_bound = length_bound
        self.loops = tuple(loops)
        self.margin = margin
        self._cells = {k: list(cells.get(k, [])) for k in range(4)}
        self._index = {k: {c: i for i, c in enumerate(v)} for k, v in self._cells.items()}
        self._matrices: Dict[int, BoundaryMatrix] = {}

    @property
    def inner_bound(self) -> int:
        return self.length_bound - self.margin

    def cells(self, k: int) -> List:
        if k < 0 or k > 3:
            return []
        return self._cells[k]

    def index(self, k: int) -> Dict[object, int]:
        return self._index.get(k, {})

    def size(self, k: int) -> int:
        return len(self.cells(k))

    def contains(self, cell, k: int) -> bool:
        return cell in self.index(k)

    def __contains__(self, cell):
        return any(cell in self._index[k] for k in range(4))

    def census(self) -> Dict[str, int]:
        twos = self._cells[2]
        n_square = sum(1 for c in twos if isinstance(c, SquareCell))
        return {
            'n0': len(self._cells[0]),
            'n1': len(self._cells[1]),
            'n2_square': n_square,
            'n2_p': len(twos) - n_square,
            'n3': len(self._cells[3]),
        }

    def boundary_matrix(self, k: int) -> BoundaryMatrix:
        """∂_k : C_k -> C_{k-1} in this complex's bases (k = 0 and k = 4 give zero maps)"""
        if k in self._matrices:
            return self._matrices[k]
        if k <= 0:
            matrix = BoundaryMatrix.zero(0, self.size(0))
        elif k >= 4:
            matrix = BoundaryMatrix.zero(self.size(3), 0)
        else:
            rows = self._index[k - 1]
            columns = []
            for cell in self._cells[k]:
                col = {}
                for face, coef in boundary(cell, k).items():
                    try:
                        col[rows[face]] = coef
                    except KeyError:
                        raise ComplexError(f"face {face} of {cell} is outside the truncation") from None
                columns.append(col)
            matrix = BoundaryMatrix(len(rows), columns)
        self._matrices[k] = matrix
        return matrix

    def chain_vector(self, chain: Chain) -> Dict[int, int]:
        """Sparse coordinate vector of a chain"""
        index = self.index(chain.dimension)
        out = {}
        for cell, coef in chain.items():
            try:
                out[index[cell]] = coef
            except KeyError:
                raise ComplexError(f"cell {cell} is not in the truncation") from None
        return out

    def chain_from_vector(self, k: int, vector: Mapping[int, int]) -> Chain:
        cells = self.cells(k)
        return Chain(k, [(cells[i], v) for i, v in vector.items() if v])

    def is_inner(self, chain: Chain) -> bool:
        """Supported on words of length <= L - margin"""
        return chain.extent() <= self.inner_bound

    def is_subcomplex_of(self, other: 'TruncatedComplex') -> bool:
        return all(c in other._index[k] for k in range(4) for c in self._cells[k])

    def audit_closure(self) -> List[str]:
        """Faces missing from the complex; empty when closed"""
        problems = []
        for k in (1, 2, 3):
            below = self._index[k - 1]
            for cell in self._cells[k]:
                for face, _ in boundary(cell, k).items():
                    if face not in below:
                        problems.append(f"{cell} -> {face}")
        return problems

    def __repr__(self):
        return f"TruncatedComplex(L={self.length_bound}, {self.census()})"


class ComplexBuilder:
    """Enumerates the cells of a truncation dimension by dimension"""

    def __init__(self, system: RewritingSystem, length_bound: int, loops: Sequence[LoopDef] = (),
                 with_3_cells: bool = False, max_cells: int = DEFAULT_MAX_CELLS,
                 margin: int = DEFAULT_MARGIN, components: Optional[Iterable[Word]] = None,
                 show_progress: bool = False):
        """
        Args:
            system: Rewriting system
            length_bound: L, the maximum vertex length
            loops: Loops along which [u, p, v] cells are attached
            with_3_cells: Attach [f, σ] and [σ, f]
            max_cells: Cap on the total number of cells
            margin: Inner margin m for membership verdicts
            components: Seed words; keep only their connected components
            show_progress: tqdm bars on stderr
        """
        if length_bound < 0:
            raise ComplexError("length bound must be non-negative")
        if length_bound < system.max_lhs_len and length_bound > 0:
            raise ComplexError(f"length bound {length_bound} is below the longest lhs "
                               f"({system.max_lhs_len})")
        self.system = system
        self.alphabet = system.alphabet
        self.L = length_bound
        self.loops = list(loops)
        self.with_3_cells = with_3_cells
        self.max_cells = max_cells
        self.margin = margin
        self.components = None if components is None else [tuple(w) for w in components]
        self.show_progress = show_progress
        self.logger = setup_logger(f'Complex-L{length_bound}')
        self._count = 0

    def _charge(self, n=1):
        self._count += n
        if self._count > self.max_cells:
            raise ResourceLimitError(f"truncation at L={self.L} exceeds {self.max_cells} cells")

    def _vertices(self) -> List[Word]:
        words = list(self.alphabet.words_up_to(self.L))
        self._charge(len(words))
        if self.components is None:
            return words
        present = set(words)
        uf = UnionFind(words)
        for w in words:
            for e in reduction_edges(w, self.system):
                if e.terminal in present:
                    uf.union(w, e.terminal)
        seeds = [s for s in self.components if s in present]
        roots = {uf.find(s) for s in seeds}
        kept = [w for w in words if uf.find(w) in roots]
        self._count = len(kept)
        return kept

    def _edges(self, vertices: List[Word]) -> List[Edge]:
        present = set(vertices)
        edges = []
        for w in progress(vertices, self.show_progress, desc='edges'):
            for e in reduction_edges(w, self.system):
                if e.terminal in present:
                    edges.append(e)
                    self._charge()
        return edges

    def _squares(self, vertices: List[Word], edge_set) -> List[SquareCell]:
        out = []
        for w in progress(vertices, self.show_progress, desc='squares'):
            found = list(self.system.matches(w))
            for i, r1 in found:
                end = i + len(r1.lhs)
                for j, r2 in found:
                    if j < end:
                        continue
                    e = Edge(w[:i], r1, 1, ())
                    f = Edge(w[end:j], r2, 1, w[j + len(r2.lhs):])
                    cell = square(e, f)
                    faces = boundary(cell, 2)
                    if all(face in edge_set for face in faces):
                        out.append(cell)
                        self._charge()
        return out

    def _pcells(self, edge_set) -> List[PCell]:
        out = []
        for loop in self.loops:
            room = self.L - loop.extent
            if room < 0:
                self.logger.debug(f"loop {loop.id} does not fit at L={self.L}")
                continue
            contexts = list(self.alphabet.words_up_to(room))
            for u in progress(contexts, self.show_progress, desc=f'cells {loop.id}'):
                for v in contexts:
                    if len(u) + len(v) > room:
                        continue
                    cell = PCell(u, loop, v)
                    if all(e.positive() in edge_set for e in cell.boundary_path()):
                        out.append(cell)
                        self._charge()
        return out

    def _three_cells(self, edges: List[Edge], twos: List, two_set) -> List[ThreeCell]:
        alphabet = self.alphabet
        bare = [e for e in edges if not e.right]
        out = []
        for sigma in progress(twos, self.show_progress, desc='3-cells'):
            room = self.L - sigma.extent
            for f in bare:
                if max(len(f.initial), len(f.terminal)) > room:
                    continue
                for cell in (edge_first(f, sigma), cell_first(sigma, f)):
                    if all(face in two_set for face, _ in three_cell_faces(cell)):
                        out.append(cell)
                        self._charge()
        out = list(dict.fromkeys(out))
        out.sort(key=lambda t: (alphabet.sort_key(t.max_vertex(alphabet)), t.orientation.value, str(t)))
        return out

    def build(self) -> TruncatedComplex:
        """
        Enumerate every cell of the truncation

        Returns:
            TruncatedComplex

        Raises:
            ResourceLimitError: more than max_cells cells
        """
        self.logger.info(f"Building truncation L={self.L} with {len(self.loops)} loops, "
                         f"3-cells={self.with_3_cells}")
        vertices = self._vertices()
        edges = self._edges(vertices)
        edge_set = set(edges)
        twos = self._squares(vertices, edge_set) + self._pcells(edge_set)
        alphabet = self.alphabet
        twos.sort(key=lambda c: (alphabet.sort_key(two_cell_max_vertex(c, alphabet)),
                                 isinstance(c, PCell), str(c)))
        threes = []
        if self.with_3_cells:
            threes = self._three_cells(edges, twos, set(twos))
        complex_ = TruncatedComplex(self.system, self.L, self.loops,
                                    {0: vertices, 1: edges, 2: twos, 3: threes}, margin=self.margin)
        self.logger.info(f"Census: {complex_.census()}")
        return complex_


def build_truncated(system: RewritingSystem, length_bound: int, loops: Sequence[LoopDef] = (),
                    with_3_cells: bool = False, max_cells: int = DEFAULT_MAX_CELLS,
                    margin: int = DEFAULT_MARGIN, components: Optional[Iterable[Word]] = None,
                    show_progress: bool = False) -> TruncatedComplex:
    """Build the truncation of (𝒟, 𝐩) at length bound L"""
    return ComplexBuilder(system, length_bound, loops, with_3_cells, max_cells, margin,
                          components, show_progress).build()
