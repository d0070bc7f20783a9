"""Tests for Pride systems, their loops, ψ₀ and the asphericity probe"""

import itertools

import pytest

from src.homology import homology, les_exactness, relative_homology
from src.peiffer import PeifferCalculus, YSymbol
from src.pride import (
    HAT,
    GroupPresentation,
    PrideSystem,
    Relator,
    Trivial,
    aspherical_probe,
    cancellation_path,
    commutator_shadow,
    eta_rep,
    middle_out_path,
    p_path,
    pride_loops,
    pride_pair,
    psi0_eval,
    q_cycle,
    q_path,
    remark_ir_audit,
    symbol_presentation,
    translate_cycle_right,
    trivial_path,
    trivial_tau_chain,
)
from src.rewriting import Edge, Path, normalize_path
from src.squier import boundary_of_chain, chain_of_path
from src.utils.exceptions import PathError, PresentationError


@pytest.fixture
def pride_xy(xy_trivial):
    return PrideSystem(xy_trivial)


def test_rules_and_tags(trivial_x):
    pride = PrideSystem(trivial_x)
    ids = [rule.id for rule in pride.system]
    assert ids == ['r1+', 'r1-', 't:x+', 't:x-']
    assert pride.tag('r1-') == Relator('r1', -1)
    assert pride.tag('t:x+') == Trivial('x', 1)
    assert pride.relator_rule('r1', -1).lhs == ('x^-1',)
    assert pride.cancel_rule('x^-1').lhs == ('x^-1', 'x')
    with pytest.raises(PresentationError):
        pride.tag('nope')


def test_presentation_validation():
    with pytest.raises(PresentationError):
        GroupPresentation.parse(['x'], ['x x^-1'])
    with pytest.raises(PresentationError):
        GroupPresentation.parse(['x'], ['x', 'x^-1'])
    with pytest.raises(PresentationError):
        GroupPresentation(['x'], [('r', ())])


def test_subpresentation(xy_trivial):
    sub = xy_trivial.subpresentation()
    assert sub.labels == ['r1']
    assert PrideSystem(sub).relator_rule('r1') == PrideSystem(xy_trivial).relator_rule('r1')
    with pytest.raises(PresentationError):
        sub.subpresentation()


def test_middle_out_path(pride_xy):
    path = middle_out_path(pride_xy, ('x', 'y'))
    assert path.initial == ('x', 'y', 'y^-1', 'x^-1')
    assert path.terminal == ()
    assert [e.rule.id for e in path] == ['t:y+', 't:x+']


def test_trivial_path_reaches_the_word(pride_xy):
    w = ('x', 'y', 'y^-1', 'x^-1', 'y')
    path = trivial_path(pride_xy, w)
    assert path.initial == ('y',)
    assert path.terminal == w
    assert cancellation_path(pride_xy, w).is_positive


@pytest.mark.parametrize('u', [(), ('y',), ('x', 'y^-1')])
def test_q_path_chain_is_q_cycle(pride_xy, u):
    path = q_path(pride_xy, 'r1', u)
    assert path.is_closed and path.initial == ()
    z = chain_of_path(path)
    assert z == q_cycle(pride_xy, 'r1', u)
    assert not boundary_of_chain(z)


@pytest.mark.parametrize('u', [(), ('y',)])
def test_p_path_is_closed(pride_xy, u):
    path = p_path(pride_xy, 'r2', u)
    assert path.is_closed and path.initial == ()
    assert not boundary_of_chain(chain_of_path(path))


def test_eta_rep(pride_xy):
    (edge,) = eta_rep(pride_xy, 'r2')
    assert edge.initial == ('y',)
    assert edge.terminal == ()


def test_loops(pride_xy):
    loops = pride_loops(pride_xy)
    assert [loop.id for loop in loops] == ['q_r1', 'q_r2', 't_x+', 't_x-', 't_y+', 't_y-']
    for loop in loops:
        assert loop.path.is_closed


def test_psi0_of_q_path(trivial_x):
    pride = PrideSystem(trivial_x)
    seq = psi0_eval(pride, q_path(pride, 'r1'))
    assert seq == (YSymbol((), 'r1', 1), YSymbol((), 'r1', -1))
    assert PeifferCalculus(trivial_x).is_identity_sequence(seq)

    hat = psi0_eval(pride, q_path(pride, 'r1'), tagging=HAT)
    assert hat == (YSymbol((), 'r1', 1), YSymbol((), 'r1~', 1))
    assert PeifferCalculus(symbol_presentation(pride, HAT)).is_identity_sequence(hat)


def test_psi0_skips_trivial_edges(pride_xy):
    assert psi0_eval(pride_xy, cancellation_path(pride_xy, ('x', 'x^-1', 'y', 'y^-1'))) == ()


def test_psi0_conjugates_by_reduced_left_context(pride_xy):
    e = Edge(('x', 'y', 'y^-1'), pride_xy.relator_rule('r1'), 1, ())
    assert psi0_eval(pride_xy, [e]) == (YSymbol(('x',), 'r1', 1),)


def test_psi0_rejects_unknown_tagging(trivial_x):
    pride = PrideSystem(trivial_x)
    with pytest.raises(PresentationError):
        psi0_eval(pride, q_path(pride, 'r1'), tagging='plain')


@pytest.mark.parametrize('name', ['trivial_x', 'xy_trivial', 'x_cubed'])
def test_every_loop_overlap_is_a_critical_pair(request, name):
    entries = remark_ir_audit(request.getfixturevalue(name))
    assert entries
    assert all(entry.found for entry in entries)
    assert entries[0].to_dict()['found'] is True


def test_commutator_shadow(trivial_x):
    pride = PrideSystem(trivial_x)
    a = normalize_path(('x', 'x'), pride.system)
    b = normalize_path(('x^-1',), pride.system)
    difference, squares = commutator_shadow(a, b)
    assert boundary_of_chain(squares) == difference
    assert len(squares) == len(a) * len(b)


def test_commutator_shadow_needs_positive_paths(trivial_x):
    pride = PrideSystem(trivial_x)
    a = normalize_path(('x',), pride.system).inverse()
    with pytest.raises(PathError):
        commutator_shadow(a, Path.empty(()))


def test_aspherical_probe(trivial_x):
    report = aspherical_probe(trivial_x, 6, margin=2)
    assert report.verdict == 'consistent'
    assert report.bounded > 0
    assert report.census['n2_p'] > 0


def test_vacuous_probe(trivial_x):
    report = aspherical_probe(trivial_x, 0, margin=0)
    assert report.bounded == 0
    assert report.verdict == 'consistent'


def test_pride_pair_exactness(xy_trivial):
    pair = pride_pair(xy_trivial, 2, margin=0)
    assert pair.sub.size(1) < pair.total.size(1)
    assert les_exactness(pair, 1).exact


def _rank_d2(complex_, betti):
    """rank ∂₂ = n₁ - n₀ + b₀ - b₁"""
    return complex_.size(1) - complex_.size(0) + betti(0) - betti(1)


@pytest.mark.slow
def test_pride_pair_exactness_at_five(xy_trivial):
    """<x, y | x> inside <x, y | x, y>: both sides at H₁ against ranks read off three homologies"""
    pair = pride_pair(xy_trivial, 5, margin=0)
    total, sub, quotient = pair.total, pair.sub, pair.quotient()
    rank_total = _rank_d2(total, lambda k: homology(total, k).betti)
    rank_sub = _rank_d2(sub, lambda k: homology(sub, k).betti)
    rank_quotient = _rank_d2(quotient, lambda k: relative_homology(pair, k).betti)
    # B₁(total) ∩ C₁(sub) modulo B₁(sub)
    expected = rank_total - rank_quotient - rank_sub
    assert expected >= 0
    check = les_exactness(pair, 1)
    assert check.kernel_rank == expected
    assert check.image_rank == expected
    assert check.exact


def _inner_cycle_count(presentation, bound):
    """E - V + components of the rewriting graph on words of length <= bound"""
    system = PrideSystem(presentation).system
    words = [w for n in range(bound + 1) for w in itertools.product(system.alphabet.letters, repeat=n)]
    root = {w: w for w in words}

    def find(w):
        while root[w] != w:
            root[w] = root[root[w]]
            w = root[w]
        return w

    edges = 0
    for w in words:
        for rule in system:
            k = len(rule.lhs)
            for i in range(len(w) - k + 1):
                if w[i:i + k] == rule.lhs:
                    edges += 1
                    root[find(w)] = find(w[:i] + rule.rhs + w[i + k:])
    components = len({find(w) for w in words})
    return edges - len(words) + components


def test_inner_cycle_count_matches_enumeration(trivial_x):
    """31 words, 132 edges, one component at length <= 4"""
    expected = _inner_cycle_count(trivial_x, 4)
    assert expected == 102
    report = aspherical_probe(trivial_x, 6, margin=2)
    assert report.bounded + len(report.unbounded) == expected


def test_trivial_tau_chain(pride_xy):
    z = trivial_tau_chain(pride_xy, ('x', 'y'))
    assert len(z) == 2
    d = boundary_of_chain(z)
    assert d.coefficient(('x', 'y', 'y^-1', 'x^-1')) == 1
    assert d.coefficient(()) == -1
    assert not trivial_tau_chain(pride_xy, ())


def test_translated_q_cycle_is_a_cycle(pride_xy):
    z = q_cycle(pride_xy, 'r1')
    moved = translate_cycle_right(z, ('y',))
    assert moved == z.translate((), ('y',))
    assert not boundary_of_chain(moved)
