"""Tests for rules, reduction, critical pairs and Knuth-Bendix completion"""

import pytest

from src.actions import cyclic_group
from src.rewriting import (
    CompletedSystemNormalForms,
    ConfluentOnBound,
    CounterexampleFound,
    Equivalent,
    FreeGroupNormalForms,
    MonoidTableNormalForms,
    NotFoundWithinBound,
    PairKind,
    Resolvable,
    Rule,
    RewritingSystem,
    Unresolved,
    congruence_classes,
    critical_pairs,
    is_complete,
    is_resolvable,
    knuth_bendix,
    newman_confluence_check,
    normalize,
    normalize_path,
    single_step_rewrites,
    thue_oracle,
)
from src.utils.exceptions import NonterminationSuspected, RuleError
from src.words import Alphabet


@pytest.fixture
def ab():
    return Alphabet(['a', 'b'])


@pytest.fixture
def non_confluent(ab):
    """ab -> b, ba -> a: the overlap aba splits"""
    return RewritingSystem.from_pairs(ab, [(('a', 'b'), ('b',)), (('b', 'a'), ('a',))])


def test_rule_validation(ab):
    with pytest.raises(RuleError):
        RewritingSystem(ab, [Rule('r', ('a',), ('a',))])
    with pytest.raises(RuleError):
        RewritingSystem(ab, [Rule('r', (), ('a',))])
    with pytest.raises(RuleError):
        RewritingSystem(ab, [Rule('r', ('a',), ()), Rule('r', ('b',), ())])


def test_single_step_rewrites(c3_system):
    """aaaA has the aaa redex at 0 and the aA redex at 2"""
    rewrites = single_step_rewrites(('a', 'a', 'a', 'A'), c3_system)
    assert [(r.rule_id, r.position, r.result) for r in rewrites] == [
        ('r1', 0, ('A',)),
        ('r2', 2, ('a', 'a')),
    ]


def test_normalize_is_leftmost(c3_system):
    path = normalize_path(('a', 'a', 'a', 'a'), c3_system)
    assert path.terminal == ('a',)
    assert path.is_positive
    assert len(path) == 1


def test_nontermination_is_reported(ab):
    growing = RewritingSystem.from_pairs(ab, [(('a',), ('b', 'a'))])
    with pytest.raises(NonterminationSuspected):
        normalize(('a',), growing, step_limit=50)


def test_critical_pairs_of_c3(c3_system):
    pairs = critical_pairs(c3_system)
    kinds = {cp.kind for cp in pairs}
    assert kinds == {PairKind.OVERLAP}
    words = {Alphabet.format(cp.overlap_word) for cp in pairs}
    assert 'a a a A' in words
    assert 'a A a' in words
    for cp in pairs:
        assert cp.edge_a.initial == cp.overlap_word == cp.edge_b.initial
        assert cp.edge_a != cp.edge_b


def test_inclusion_pair(ab):
    system = RewritingSystem.from_pairs(ab, [(('a', 'b', 'a'), ('b',)), (('b',), ('a',))])
    inclusions = [cp for cp in critical_pairs(system) if cp.kind is PairKind.INCLUSION]
    assert len(inclusions) == 1
    assert inclusions[0].overlap_word == ('a', 'b', 'a')


def test_resolvability(c3_system, non_confluent):
    aAa = next(cp for cp in critical_pairs(c3_system) if cp.overlap_word == ('a', 'A', 'a'))
    verdict = is_resolvable(aAa, c3_system)
    assert isinstance(verdict, Resolvable)
    assert verdict.common == ('a',)

    aaaA = next(cp for cp in critical_pairs(c3_system) if cp.overlap_word == ('a', 'a', 'a', 'A'))
    assert isinstance(is_resolvable(aaaA, c3_system), Unresolved)

    (aba,) = [cp for cp in critical_pairs(non_confluent) if cp.overlap_word == ('a', 'b', 'a')]
    verdict = is_resolvable(aba, non_confluent)
    assert isinstance(verdict, Unresolved)
    assert {verdict.normal_a, verdict.normal_b} == {('a',), ('a', 'a')}


def test_knuth_bendix_c3(c3_system):
    """{aaa, aA, Aa} completes to aA -> 1, Aa -> 1, aa -> A, AA -> a"""
    result = knuth_bendix(c3_system)
    assert result.is_complete
    pairs = {(r.lhs, r.rhs) for r in result.system}
    assert pairs == {
        (('a', 'A'), ()),
        (('A', 'a'), ()),
        (('a', 'a'), ('A',)),
        (('A', 'A'), ('a',)),
    }
    assert is_complete(result.system)


def test_completion_matches_thue_classes(c3_system):
    """Normal forms of words up to length 6 are exactly the Thue classes"""
    completed = knuth_bendix(c3_system).system
    forms = {normalize(w, completed) for w in c3_system.alphabet.words_up_to(6)}
    classes = congruence_classes(c3_system, 6)
    assert len(forms) == len(classes) == 3


def test_completion_respects_limits(ab):
    """ab -> ba style systems grow; a tiny rule cap stops completion"""
    system = RewritingSystem.from_pairs(ab, [(('a', 'b', 'a'), ('b', 'a', 'b'))])
    result = knuth_bendix(system, max_rules=2)
    assert not result.is_complete
    assert result.reason


def test_newman_check(c3_system, non_confluent):
    completed = knuth_bendix(c3_system).system
    verdict = newman_confluence_check(completed, 6)
    assert isinstance(verdict, ConfluentOnBound)
    assert verdict.words_checked == 2 ** 7 - 1

    verdict = newman_confluence_check(non_confluent, 4)
    assert isinstance(verdict, CounterexampleFound)
    assert verdict.word == ('a', 'b', 'a')


def test_thue_oracle(c3_system):
    found = thue_oracle(('a', 'a', 'a', 'a'), ('a',), c3_system, length_bound=6)
    assert isinstance(found, Equivalent)
    assert found.chain[0] == ('a', 'a', 'a', 'a')
    assert found.chain[-1] == ('a',)

    missing = thue_oracle(('a',), ('A',), c3_system, length_bound=4)
    assert isinstance(missing, NotFoundWithinBound)
    assert missing.exhausted


def test_normal_form_providers(c3_system):
    completed = CompletedSystemNormalForms(knuth_bendix(c3_system).system)
    assert completed.equal(('a', 'a'), ('A',)) is True
    assert completed.equal(('a',), ('A',)) is False

    F = Alphabet.free_group(['x'])
    free = FreeGroupNormalForms(F)
    assert free.normal_form(('x', 'x^-1', 'x')) == ('x',)

    C3 = cyclic_group(3)
    table = MonoidTableNormalForms(C3, {'a': 1, 'A': 2})
    assert table.equal(('a', 'a', 'a'), ()) is True
    assert table.equal(('a',), ('A',)) is False
