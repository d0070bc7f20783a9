"""
Homology Module
Exact integer linear algebra for truncated complexes
"""

from .matrix import BoundaryMatrix
from .lattice import IntegerLattice, xgcd
from .smith import smith_normal_form, invariant_factors, is_unimodular
from .homology import (
    HomologyGroup,
    MatrixComplex,
    Witness,
    NotBoundaryInTruncation,
    INCONCLUSIVE_CAVEAT,
    homology,
    is_boundary,
    solve_boundary,
    kernel_basis,
    boundary_rank,
    betti_audit,
    composition_is_zero,
)
from .relative import RelativePair, LesCheck, relative_homology, les_exactness
from .phi_kernel import InKp, NotInKp, phi_image, phi_kernel_membership, phi_matrix

__all__ = [
    'BoundaryMatrix', 'IntegerLattice', 'xgcd',
    'smith_normal_form', 'invariant_factors', 'is_unimodular',
    'HomologyGroup', 'MatrixComplex', 'Witness', 'NotBoundaryInTruncation',
    'INCONCLUSIVE_CAVEAT', 'homology', 'is_boundary', 'solve_boundary', 'kernel_basis',
    'boundary_rank', 'betti_audit', 'composition_is_zero',
    'RelativePair', 'LesCheck', 'relative_homology', 'les_exactness',
    'InKp', 'NotInKp', 'phi_image', 'phi_kernel_membership', 'phi_matrix',
]
