"""Tests for Smith normal form, homology and boundary membership"""

import numpy as np
import pytest

from src.homology import (
    HomologyGroup,
    IntegerLattice,
    MatrixComplex,
    NotBoundaryInTruncation,
    RelativePair,
    Witness,
    betti_audit,
    homology,
    invariant_factors,
    is_boundary,
    is_unimodular,
    les_exactness,
    relative_homology,
    smith_normal_form,
    xgcd,
)
from src.pride import PrideSystem, pride_loops, q_cycle
from src.rewriting import Edge
from src.squier import Chain, boundary_of_chain, build_truncated
from src.utils.exceptions import ComplexError, NotACycleError


@pytest.fixture
def pride_x(trivial_x):
    return PrideSystem(trivial_x)


@pytest.fixture
def bare(pride_x):
    """Truncation at L=2 without loop cells"""
    return build_truncated(pride_x.system, 2, margin=0)


@pytest.fixture
def with_loops(pride_x):
    return build_truncated(pride_x.system, 2, pride_loops(pride_x), margin=0)


def test_xgcd():
    x, y, g = xgcd(240, 46)
    assert abs(g) == 2
    assert 240 * x + 46 * y == g


def test_smith_normal_form():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    U, D, V = smith_normal_form(A)
    assert (U.dot(np.array(A, dtype=object)).dot(V) == D).all()
    assert [D[i, i] for i in range(3)] == [2, 6, 12]
    assert is_unimodular(U) and is_unimodular(V)


def test_invariant_factors_of_singular_matrix():
    assert invariant_factors([[1, 2], [2, 4]]) == [1]
    assert invariant_factors([[0, 0], [0, 0]]) == []


def test_lattice_membership():
    lattice = IntegerLattice.from_columns([{0: 2, 1: 1}, {1: 3}])
    assert lattice.rank == 2
    assert {0: 2, 1: 4} in lattice
    assert {0: 1} not in lattice
    combo = lattice.solve({0: 4, 1: 5})
    assert combo == {0: 2, 1: 1}


def test_projective_plane_like_complex():
    """C2 -2-> C1 -0-> C0 gives Z, Z/2, 0"""
    X = MatrixComplex.from_dense({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
    assert homology(X, 0) == HomologyGroup(1)
    assert homology(X, 1) == HomologyGroup(0, (2,))
    assert homology(X, 2).is_trivial
    assert str(homology(X, 1)) == 'Z/2'


def test_shape_mismatch():
    with pytest.raises(ComplexError):
        MatrixComplex.from_dense({0: 2, 1: 1}, {1: [[1, 1]]})


def test_homology_of_truncations(bare, with_loops):
    assert homology(bare, 0) == HomologyGroup(1)
    assert homology(bare, 1).betti == 2
    assert homology(with_loops, 1).betti == 1
    assert homology(with_loops, 2).is_trivial
    for k in (0, 1, 2):
        assert betti_audit(with_loops, k)


def test_dimension_out_of_range(bare):
    with pytest.raises(ComplexError):
        homology(bare, 5)


def test_q_cycle_bounds_its_cell(pride_x, with_loops):
    z = q_cycle(pride_x, 'r1')
    verdict = is_boundary(z, with_loops)
    assert isinstance(verdict, Witness)
    assert boundary_of_chain(verdict.preimage) == z
    assert len(verdict.preimage) == 1


def test_missing_cell_is_reported(pride_x, bare):
    verdict = is_boundary(q_cycle(pride_x, 'r1'), bare)
    assert isinstance(verdict, NotBoundaryInTruncation)
    assert verdict.definitive
    assert verdict.caveat is None


def test_outer_cycle_is_inconclusive(pride_x):
    X = build_truncated(pride_x.system, 2, margin=2)
    verdict = is_boundary(q_cycle(pride_x, 'r1'), X)
    assert isinstance(verdict, NotBoundaryInTruncation)
    assert not verdict.definitive
    assert verdict.caveat


def test_non_cycle_is_rejected(pride_x, bare):
    e = Edge((), pride_x.relator_rule('r1'), 1, ())
    with pytest.raises(NotACycleError):
        is_boundary(Chain.of(1, e), bare)


def test_zero_chain_bounds(bare):
    verdict = is_boundary(Chain(1), bare)
    assert isinstance(verdict, Witness)
    assert not verdict.preimage


def test_relative_pair(bare, with_loops):
    pair = RelativePair(with_loops, bare)
    assert relative_homology(pair, 2) == HomologyGroup(1)
    assert relative_homology(pair, 1).is_trivial
    check = les_exactness(pair, 1)
    assert check.exact
    assert check.kernel_rank == 1


def test_relative_pair_needs_subcomplex(bare, with_loops):
    with pytest.raises(ComplexError):
        RelativePair(bare, with_loops)
