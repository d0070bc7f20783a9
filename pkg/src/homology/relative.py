"""Relative homology of a pair (total, sub) and the long exact sequence check"""

from dataclasses import dataclass
from typing import Dict, List

from ..utils.exceptions import ComplexError
from ..utils.logger import setup_logger
from .homology import HomologyGroup, MatrixComplex, column_lattice, homology, kernel_basis
from .lattice import IntegerLattice


logger = setup_logger('RelativeHomology')


class RelativePair:
    """
    A truncation together with a subcomplex of it

    Raises:
        ComplexError: some cell of `sub` is missing from `total`
    """

    def __init__(self, total, sub):
        if not sub.is_subcomplex_of(total):
            raise ComplexError("not a subcomplex")
        self.total = total
        self.sub = sub
        self._quotient = None

    def quotient_cells(self, k: int) -> List[int]:
        """Indices (in total) of the k-cells outside sub"""
        inside = self.sub.index(k)
        return [i for i, c in enumerate(self.total.cells(k)) if c not in inside]

    def embedding(self, k: int) -> List[int]:
        """Index in total of each k-cell of sub"""
        where = self.total.index(k)
        return [where[c] for c in self.sub.cells(k)]

    def quotient(self) -> MatrixComplex:
        """C(total)/C(sub) with ∂̂ induced by ∂̃"""
        if self._quotient is None:
            sizes, matrices = {}, {}
            keep = {k: self.quotient_cells(k) for k in range(4)}
            for k in range(4):
                sizes[k] = len(keep[k])
            for k in range(1, 4):
                matrices[k] = self.total.boundary_matrix(k).select(keep[k - 1], keep[k])
            self._quotient = MatrixComplex(sizes, matrices)
            logger.info(f"Quotient complex sizes {sizes}")
        return self._quotient


def relative_homology(pair: RelativePair, k: int) -> HomologyGroup:
    return homology(pair.quotient(), k)


@dataclass(frozen=True)
class LesCheck:
    """Ranks over ℚ at H_k(sub) in ... -> H_{k+1}(pair) -> H_k(sub) -> H_k(total) -> ..."""

    kernel_rank: int
    image_rank: int

    @property
    def exact(self) -> bool:
        return self.kernel_rank == self.image_rank

    def to_dict(self) -> Dict:
        return {'kernel_rank': self.kernel_rank, 'image_rank': self.image_rank, 'exact': self.exact}


def _span_rank(vectors) -> int:
    lattice = IntegerLattice()
    for v in vectors:
        lattice.add(v)
    return lattice.rank


def les_exactness(pair: RelativePair, k: int = 1) -> LesCheck:
    """
    Exactness at H_k(sub), each side computed separately over ℚ

    kernel side: dim(Z_k(sub) ∩ B_k(total)) - dim B_k(sub), via
    dim Z + dim B - dim(Z + B) inside C_k(total).
    image side: ∂ of the relative (k+1)-cycles, i.e. (k+1)-chains of total
    whose boundary lies in sub, minus dim B_k(sub).
    """
    total, sub = pair.total, pair.sub
    embed = pair.embedding(k)
    sub_cycles = [{embed[i]: v for i, v in z.items()} for z in kernel_basis(sub, k)]
    total_bounds = [dict(col) for col in total.boundary_matrix(k + 1).columns]
    dim_z = len(sub_cycles)
    dim_b = _span_rank(total_bounds)
    dim_sum = _span_rank(sub_cycles + total_bounds)
    b_sub = column_lattice(sub, k + 1).rank if sub.size(k + 1) and sub.size(k) else 0
    kernel_rank = dim_z + dim_b - dim_sum - b_sub

    outside = pair.quotient_cells(k)
    d_next = total.boundary_matrix(k + 1)
    projected = d_next.select(outside, list(range(d_next.n_cols)))
    if outside:
        relative_cycles = column_lattice_of(projected).kernel_basis()
    else:
        relative_cycles = [{j: 1} for j in range(d_next.n_cols)]
    images = [d_next.apply(c) for c in relative_cycles]
    image_rank = _span_rank(images) - b_sub

    logger.info(f"LES at H_{k}(sub): kernel {kernel_rank}, image {image_rank}")
    return LesCheck(kernel_rank, image_rank)


def column_lattice_of(matrix) -> IntegerLattice:
    return IntegerLattice.from_columns(matrix.columns)
