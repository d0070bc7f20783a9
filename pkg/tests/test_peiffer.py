"""Tests for Peiffer operations, searches and the relation module"""

import random

import pytest

from src.peiffer import (
    LEFT,
    RIGHT,
    EquivalentWithTrace,
    Failure,
    NoPairing,
    PeifferCalculus,
    PrimaryPairing,
    Reduced,
    UpsilonLetter,
    YSymbol,
    delete_step,
    exchange_step,
    format_sequence,
    include_subpresentation,
    insert_step,
    is_u_product,
    peiffer_delete,
    peiffer_exchange,
    peiffer_insert,
    theta_eval,
    trace_to_dicts,
    u_generator,
    upsilon_word,
)
from src.pride import GroupPresentation, PrideSystem
from src.rewriting import CompletedSystemNormalForms, Unknown, knuth_bendix
from src.utils.exceptions import PresentationError, SequenceError


def _random_symbol(rng, presentation, max_conjugator=3):
    letters = presentation.alphabet.letters
    u = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_conjugator)))
    return YSymbol(presentation.alphabet.free_reduce(u), rng.choice(presentation.labels),
                   rng.choice((1, -1)))


def _random_sequence(rng, presentation, length):
    return tuple(_random_symbol(rng, presentation) for _ in range(length))


def _primary_sequence(rng, calculus, max_pairs=3, max_exchanges=4):
    """Cancelling pairs with conjugators of length <= 2, scrambled by exchanges"""
    s = ()
    for _ in range(rng.randint(1, max_pairs)):
        a = _random_symbol(rng, calculus.presentation, max_conjugator=2)
        s = calculus.insert(s, rng.randint(0, len(s)), a)
    for _ in range(rng.randint(1, max_exchanges)):
        s = calculus.exchange(s, rng.randrange(len(s) - 1), rng.choice((LEFT, RIGHT)))
    return s


@pytest.fixture
def calculus_x(trivial_x):
    return PeifferCalculus(trivial_x)


@pytest.fixture
def calculus_xy(xy_trivial):
    return PeifferCalculus(xy_trivial)


@pytest.fixture
def c3_forms(x_cubed):
    """Normal forms of ⟨x | x³⟩ from its completed system"""
    completion = knuth_bendix(PrideSystem(x_cubed).system)
    assert completion.is_complete
    return CompletedSystemNormalForms(completion.system)


@pytest.fixture
def commuting_pair():
    """(x; r1; +1)(1; r1; -1): an identity sequence whenever x commutes with r1"""
    return (YSymbol(('x',), 'r1', 1), YSymbol((), 'r1', -1))


def test_theta(calculus_x):
    a = calculus_x.symbol(('x', 'x^-1', 'x'), 'r1', 1)
    assert a.u == ('x',)
    assert calculus_x.theta(a) == ('x', 'x', 'x^-1')
    assert calculus_x.theta_eval([a]) == ('x',)
    assert calculus_x.theta_eval([a, a.flip()]) == ()
    assert theta_eval([a], calculus_x.presentation) == ('x',)


def test_unknown_relator(calculus_x):
    with pytest.raises(PresentationError):
        calculus_x.symbol((), 'r9', 1)


@pytest.mark.parametrize('seed', range(5))
def test_exchanges_preserve_theta(calculus_xy, seed):
    rng = random.Random(seed)
    s = _random_sequence(rng, calculus_xy.presentation, 5)
    before = calculus_xy.theta_eval(s)
    for i in range(len(s) - 1):
        for direction in (LEFT, RIGHT):
            t = calculus_xy.exchange(s, i, direction)
            assert calculus_xy.theta_eval(t) == before
            undo = calculus_xy.inverse_step(s, exchange_step(i, direction))
            assert calculus_xy.apply(t, undo) == s


@pytest.mark.parametrize('seed', range(5))
def test_insert_and_delete_preserve_theta(calculus_xy, seed):
    rng = random.Random(100 + seed)
    s = _random_sequence(rng, calculus_xy.presentation, 3)
    symbol = _random_symbol(rng, calculus_xy.presentation)
    i = rng.randint(0, len(s))
    t = calculus_xy.insert(s, i, symbol)
    assert len(t) == len(s) + 2
    assert calculus_xy.theta_eval(t) == calculus_xy.theta_eval(s)
    assert calculus_xy.delete(t, i) == s


@pytest.mark.parametrize('stem', ['xy_trivial', 'x_cubed'])
def test_random_operations_preserve_theta(request, stem):
    """1000 random exchanges, insertions and deletions in walks of 20"""
    calculus = PeifferCalculus(request.getfixturevalue(stem))
    rng = random.Random(7)
    operations = 0
    for _ in range(50):
        s = _random_sequence(rng, calculus.presentation, rng.randint(2, 4))
        theta = calculus.theta_eval(s)
        for _ in range(20):
            deletable = [i for i in range(len(s) - 1) if calculus.can_delete(s, i)]
            roll = rng.random()
            if deletable and roll < 0.3:
                s = calculus.delete(s, rng.choice(deletable))
            elif len(s) < 2 or (roll < 0.5 and len(s) < 8):
                s = calculus.insert(s, rng.randint(0, len(s)), _random_symbol(rng, calculus.presentation, 2))
            else:
                s = calculus.exchange(s, rng.randrange(len(s) - 1), rng.choice((LEFT, RIGHT)))
            operations += 1
            assert calculus.theta_eval(s) == theta
    assert operations == 1000


def test_illegal_operations(calculus_x, commuting_pair):
    with pytest.raises(SequenceError):
        calculus_x.delete(commuting_pair, 0)
    with pytest.raises(SequenceError):
        calculus_x.exchange(commuting_pair, 1)
    with pytest.raises(SequenceError):
        calculus_x.replay(commuting_pair, [delete_step(0)])


def test_replay(calculus_xy):
    a = calculus_xy.symbol(('y',), 'r1', 1)
    trace = [insert_step(0, a), exchange_step(0, LEFT), exchange_step(0, RIGHT), delete_step(0)]
    assert calculus_xy.replay((), trace) == ()
    assert peiffer_exchange((a, a.flip()), 0, LEFT, calculus_xy.presentation)[1] == a


def test_primary_reduction(calculus_x, commuting_pair):
    """In the trivial group every pair of conjugators is congruent"""
    oracle = lambda u, v: True
    pairing = calculus_x.find_primary_pairing(commuting_pair, oracle)
    assert pairing == PrimaryPairing(((0, 1),))

    outcome = calculus_x.reduce_primary(commuting_pair, oracle)
    assert isinstance(outcome, Reduced)
    assert calculus_x.replay(commuting_pair, outcome.trace) == ()
    assert trace_to_dicts(outcome.trace)[-1]['op'] == 'delete'


def test_adjacent_pairs_cancel_without_exchanges(calculus_xy):
    a = calculus_xy.symbol(('x',), 'r2', -1)
    b = calculus_xy.symbol((), 'r1', 1)
    s = (b, a, a.flip(), b.flip())
    outcome = calculus_xy.reduce_primary(s, lambda u, v: u == v)
    assert isinstance(outcome, Reduced)
    assert [step.kind for step in outcome.trace] == ['delete', 'delete']


def test_exchanged_pair_is_realigned(calculus_xy):
    """(^θ(a) a⁻¹, a) cancels after the reverse exchange"""
    a = calculus_xy.symbol(('y',), 'r1', 1)
    s = calculus_xy.exchange((a, a.flip()), 0, LEFT)
    assert not calculus_xy.can_delete(s, 0)
    outcome = calculus_xy.reduce_primary(s, lambda u, v: True, max_states=1)
    assert isinstance(outcome, Reduced)
    assert outcome.trace == (exchange_step(0, RIGHT), delete_step(0))


def test_couple_carried_across_a_neighbour(calculus_xy):
    a = calculus_xy.symbol(('x',), 'r2', 1)
    b = calculus_xy.symbol((), 'r1', -1)
    s = calculus_xy.exchange((a, b, b.flip(), a.flip()), 1, LEFT)
    s = calculus_xy.exchange(s, 0, RIGHT)
    outcome = calculus_xy.reduce_primary(s, lambda u, v: True, max_states=1)
    assert isinstance(outcome, Reduced)
    assert calculus_xy.replay(s, outcome.trace) == ()


@pytest.mark.parametrize('stem', ['xy_trivial', 'x_cubed'])
def test_seeded_primary_sequences_reduce(request, c3_forms, stem):
    presentation = request.getfixturevalue(stem)
    calculus = PeifferCalculus(presentation)
    oracle = c3_forms.equal if stem == 'x_cubed' else (lambda u, v: True)
    for seed in range(25):
        s = _primary_sequence(random.Random(seed), calculus)
        assert len(s) <= 6
        assert calculus.is_identity_sequence(s)
        assert isinstance(calculus.find_primary_pairing(s, oracle), PrimaryPairing)
        outcome = calculus.reduce_primary(s, oracle)
        assert isinstance(outcome, Reduced), (seed, format_sequence(s), outcome)
        assert calculus.replay(s, outcome.trace) == ()


def test_proper_power_is_not_primary(x_cubed, c3_forms, commuting_pair):
    calculus = PeifferCalculus(x_cubed)
    assert calculus.is_identity_sequence(commuting_pair)
    pairing = calculus.find_primary_pairing(commuting_pair, c3_forms.equal)
    assert isinstance(pairing, NoPairing)
    outcome = calculus.reduce_primary(commuting_pair, c3_forms.equal)
    assert isinstance(outcome, Failure)
    assert isinstance(outcome.cause, NoPairing)


def test_pairing_needs_identity_sequence(calculus_x):
    s = (calculus_x.symbol((), 'r1', 1),)
    assert isinstance(calculus_x.find_primary_pairing(s, lambda u, v: True), NoPairing)


def test_inconclusive_oracle(calculus_x, commuting_pair):
    verdict = calculus_x.find_primary_pairing(commuting_pair, lambda u, v: None)
    assert isinstance(verdict, Unknown)


def test_bounded_equivalence(calculus_x, commuting_pair):
    found = calculus_x.equivalent_bounded(commuting_pair, (), max_steps=4)
    assert isinstance(found, EquivalentWithTrace)
    assert calculus_x.replay(commuting_pair, found.trace) == ()


def test_relation_module_ignores_exponent(c3_forms, x_cubed, commuting_pair):
    calculus = PeifferCalculus(x_cubed)
    image = calculus.relation_module_image(commuting_pair, c3_forms)
    x_form = c3_forms.normal_form(('x',))
    assert image.coefficient('r1', x_form) == 1
    assert image.coefficient('r1', ()) == 1
    inverted = calculus.relation_module_image([UpsilonLetter(commuting_pair[0], inverted=True)], c3_forms)
    assert inverted.coefficient('r1', x_form) == -1


@pytest.mark.parametrize('seed', range(3))
def test_relation_module_is_exchange_invariant(x_cubed, c3_forms, seed):
    calculus = PeifferCalculus(x_cubed)
    rng = random.Random(seed)
    s = _random_sequence(rng, x_cubed, 4)
    image = calculus.relation_module_image(s, c3_forms)
    for i in range(len(s) - 1):
        for direction in (LEFT, RIGHT):
            assert calculus.relation_module_image(calculus.exchange(s, i, direction), c3_forms) == image


def test_insertion_doubles_in_relation_module(x_cubed, c3_forms):
    calculus = PeifferCalculus(x_cubed)
    a = calculus.symbol(('x',), 'r1', -1)
    before = calculus.relation_module_image((), c3_forms)
    after = calculus.relation_module_image(calculus.insert((), 0, a), c3_forms)
    difference = after - before
    assert difference.coefficient('r1', c3_forms.normal_form(('x',))) == 2


def test_u_generators_are_central(calculus_xy):
    a = calculus_xy.symbol(('x',), 'r2', 1)
    b = UpsilonLetter(calculus_xy.symbol(('y',), 'r1', -1), inverted=True)
    g = u_generator(a)
    assert is_u_product(g)
    witness = calculus_xy.centrality_witness(b, g)
    assert witness.end == (b,) + g
    with pytest.raises(SequenceError):
        calculus_xy.centrality_witness(b, upsilon_word([a]))


def test_insertion_probe(calculus_xy):
    a = calculus_xy.symbol((), 'r1', 1)
    b = calculus_xy.symbol(('x',), 'r2', -1)
    w = upsilon_word([a]) + u_generator(b) + upsilon_word([a.flip()])
    evidence = calculus_xy.insertion_normal_probe(w)
    assert is_u_product(evidence.remainder)
    assert isinstance(calculus_xy.insertion_normal_probe(upsilon_word([a])), Unknown)


def test_include_subpresentation(xy_trivial):
    sub = xy_trivial.subpresentation()
    s = (YSymbol(('y',), 'r1', 1),)
    assert include_subpresentation(s, sub, xy_trivial) == s


def test_include_matches_relators_by_word(xy_trivial):
    """<x, y | y> labels y as r1; in <x, y | x, y> it is r2"""
    sub = GroupPresentation.parse(['x', 'y'], ['y'])
    s = (YSymbol((), 'r1', 1), YSymbol(('x',), 'r1', -1))
    assert include_subpresentation(s, sub, xy_trivial) == (
        YSymbol((), 'r2', 1), YSymbol(('x',), 'r2', -1))


def test_include_flips_inverted_relators(xy_trivial):
    sub = GroupPresentation.parse(['x', 'y'], ['x^-1'])
    s = (YSymbol(('y',), 'r1', 1),)
    assert include_subpresentation(s, sub, xy_trivial) == (YSymbol(('y',), 'r1', -1),)


def test_include_rejects_foreign_relators(xy_trivial):
    sub = GroupPresentation.parse(['x', 'y'], ['x y'])
    with pytest.raises(PresentationError):
        include_subpresentation((YSymbol((), 'r1', 1),), sub, xy_trivial)


def test_format_sequence(commuting_pair):
    assert format_sequence(commuting_pair) == '[(x; r1; +1), (1; r1; -1)]'


def test_module_level_insert_and_delete(xy_trivial):
    a = YSymbol(('y',), 'r2', -1)
    t = peiffer_insert((), 0, a, xy_trivial)
    assert t == (a, a.flip())
    assert peiffer_delete(t, 0, xy_trivial) == ()
