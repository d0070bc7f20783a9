"""Integral homology and boundary membership"""

import weakref
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ..utils.exceptions import ComplexError, NotACycleError
from ..utils.logger import setup_logger
from .lattice import IntegerLattice
from .matrix import BoundaryMatrix


logger = setup_logger('Homology')

INCONCLUSIVE_CAVEAT = "inconclusive for the infinite complex"

_LATTICES = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class HomologyGroup:
    """ℤ^betti ⊕ ⊕ ℤ/t for t in torsion"""

    betti: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self) -> Dict:
        return {'betti': self.betti, 'torsion': list(self.torsion)}

    def __str__(self):
        parts = []
        if self.betti:
            parts.append('Z' if self.betti == 1 else f'Z^{self.betti}')
        parts.extend(f'Z/{t}' for t in self.torsion)
        return ' + '.join(parts) or '0'


class MatrixComplex:
    """
    A chain complex given by its boundary matrices

    Args:
        sizes: {k: rank of C_k}
        matrices: {k: ∂_k} for the nonzero maps
    """

    def __init__(self, sizes: Mapping[int, int], matrices: Mapping[int, BoundaryMatrix]):
        self.sizes = dict(sizes)
        self.matrices = dict(matrices)
        for k, m in self.matrices.items():
            if m.shape != (self.size(k - 1), self.size(k)):
                raise ComplexError(f"∂_{k} has shape {m.shape}, expected "
                                   f"({self.size(k - 1)}, {self.size(k)})")

    @classmethod
    def from_dense(cls, sizes: Mapping[int, int], matrices: Mapping[int, List[List[int]]]) -> 'MatrixComplex':
        built = {}
        for k, rows in matrices.items():
            if not rows:
                built[k] = BoundaryMatrix.zero(sizes.get(k - 1, 0), sizes.get(k, 0))
            else:
                built[k] = BoundaryMatrix.from_dense(rows)
        return cls(sizes, built)

    @property
    def top(self) -> int:
        return max(self.sizes, default=0)

    def size(self, k: int) -> int:
        return self.sizes.get(k, 0)

    def boundary_matrix(self, k: int) -> BoundaryMatrix:
        if k in self.matrices:
            return self.matrices[k]
        return BoundaryMatrix.zero(self.size(k - 1), self.size(k))


def column_lattice(X, k: int) -> IntegerLattice:
    """Echelon lattice of the columns of ∂_k, cached per complex"""
    per_complex = _LATTICES.setdefault(X, {})
    if k not in per_complex:
        per_complex[k] = IntegerLattice.from_columns(X.boundary_matrix(k).columns)
    return per_complex[k]


def _top_dimension(X) -> int:
    top = getattr(X, 'top', None)
    return 3 if top is None else top


def boundary_rank(X, k: int) -> int:
    if X.size(k) == 0 or X.size(k - 1) == 0:
        return 0
    return column_lattice(X, k).rank


def homology(X, k: int) -> HomologyGroup:
    """
    H_k = ker ∂_k / im ∂_{k+1}

    betti = n_k - rank ∂_k - rank ∂_{k+1}; torsion comes from the invariant
    factors of im ∂_{k+1}.

    Raises:
        ComplexError: k outside 0..top dimension
    """
    if k < 0 or k > _top_dimension(X):
        raise ComplexError(f"dimension {k} out of range")
    n_k = X.size(k)
    r_k = boundary_rank(X, k)
    if X.size(k + 1) and n_k:
        image = column_lattice(X, k + 1)
        r_next = image.rank
        torsion = tuple(f for f in image.invariant_factors() if f > 1)
    else:
        r_next, torsion = 0, ()
    betti = n_k - r_k - r_next
    logger.debug(f"H_{k}: n={n_k} rank∂_{k}={r_k} rank∂_{k + 1}={r_next} -> betti={betti}")
    return HomologyGroup(betti, torsion)


def kernel_basis(X, k: int) -> List[Dict[int, int]]:
    """ℤ-basis of ker ∂_k as sparse vectors over the k-cells"""
    if X.size(k - 1) == 0:
        return [{j: 1} for j in range(X.size(k))]
    return column_lattice(X, k).kernel_basis()


@dataclass(frozen=True)
class Witness:
    """∂ preimage: boundary_of(preimage) equals the queried cycle"""

    preimage: object
    vector: Dict[int, int] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class NotBoundaryInTruncation:
    """No preimage inside this truncation; only definitive for the truncation itself"""

    inner: bool

    @property
    def caveat(self) -> Optional[str]:
        return None if self.inner else INCONCLUSIVE_CAVEAT

    @property
    def definitive(self) -> bool:
        return self.inner


def solve_boundary(X, k: int, target: Mapping[int, int]) -> Optional[Dict[int, int]]:
    """x with ∂_{k+1} x = target, verified by multiplication, or None"""
    if not target:
        return {}
    if X.size(k + 1) == 0:
        return None
    x = column_lattice(X, k + 1).solve(target)
    if x is None:
        return None
    if X.boundary_matrix(k + 1).apply(x) != {i: v for i, v in target.items() if v}:
        raise ComplexError("boundary witness failed verification")
    return x


def is_boundary(z, X):
    """
    Solve ∂_{k+1} x = z exactly

    Args:
        z: Chain of dimension k (must be a cycle)
        X: TruncatedComplex

    Returns:
        Witness(preimage chain) or NotBoundaryInTruncation

    Raises:
        NotACycleError: ∂_k z != 0
    """
    k = z.dimension
    vector = X.chain_vector(z)
    if k > 0 and X.boundary_matrix(k).apply(vector):
        raise NotACycleError(f"chain of dimension {k} is not a cycle")
    x = solve_boundary(X, k, vector)
    if x is None:
        return NotBoundaryInTruncation(inner=X.is_inner(z))
    return Witness(X.chain_from_vector(k + 1, x), x)


def betti_audit(X, k: int) -> bool:
    """rank-nullity: betti_k == n_k - rank ∂_k - rank ∂_{k+1}, with the kernel counted directly"""
    kernel_rank = len(kernel_basis(X, k))
    return homology(X, k).betti == kernel_rank - boundary_rank(X, k + 1)


def composition_is_zero(X, k: int) -> bool:
    """∂_k ∘ ∂_{k+1} == 0"""
    return X.boundary_matrix(k).compose(X.boundary_matrix(k + 1)).is_zero()
