"""
Actions Module
Finite monoids, tensor products over a submonoid, dominions and universal groups
"""

from .monoid import FiniteMonoid, submonoid_closure
from .catalog import (
    table_from_operation,
    cyclic_group,
    symmetric_group,
    alternating_group,
    dihedral_group,
    full_transformation_monoid,
    semilattice,
    subgroups,
    catalog_monoid,
    CATALOG,
)
from .tensor import TensorQuotient, tensor_product, dominion, tensor_class_count, tensor_equal
from .universal import (
    UniversalGroup,
    InWDomEvidence,
    NotInWDom,
    universal_group_presentation,
    weak_dominion_probe,
)

__all__ = [
    'FiniteMonoid', 'submonoid_closure',
    'table_from_operation', 'cyclic_group', 'symmetric_group', 'alternating_group',
    'dihedral_group', 'full_transformation_monoid', 'semilattice', 'subgroups',
    'catalog_monoid', 'CATALOG',
    'TensorQuotient', 'tensor_product', 'dominion', 'tensor_class_count', 'tensor_equal',
    'UniversalGroup', 'InWDomEvidence', 'NotInWDom', 'universal_group_presentation',
    'weak_dominion_probe',
]
