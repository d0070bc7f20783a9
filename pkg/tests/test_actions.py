"""Tests for finite monoids, tensor products, dominions and universal groups"""

from itertools import combinations

import pytest

from src.actions import (
    CATALOG,
    FiniteMonoid,
    InWDomEvidence,
    NotInWDom,
    catalog_monoid,
    cyclic_group,
    dominion,
    semilattice,
    submonoid_closure,
    subgroups,
    tensor_class_count,
    tensor_equal,
    tensor_product,
    universal_group_presentation,
    weak_dominion_probe,
)
from src.io import load_monoid
from src.rewriting import RewritingSystem, Unknown
from src.utils.exceptions import MonoidTableError
from src.words import Alphabet


ORDERS = {'C2': 2, 'C3': 3, 'C4': 4, 'C6': 6, 'S3': 6, 'D4': 8, 'A4': 12, 'T2': 4, 'T3': 27, 'Chain3': 3}

SUBGROUP_COUNTS = {'C2': 2, 'C3': 2, 'C4': 3, 'C6': 4, 'S3': 6, 'D4': 10, 'A4': 10}


@pytest.mark.parametrize('name', sorted(CATALOG))
def test_catalog_orders(name):
    monoid = catalog_monoid(name)
    assert monoid.size == ORDERS[name]
    assert monoid.names[monoid.identity] in ('e', '12', '123', '2')


def test_unknown_catalog_name():
    with pytest.raises(MonoidTableError):
        catalog_monoid('Q8')


@pytest.mark.parametrize('name', sorted(SUBGROUP_COUNTS))
def test_subgroup_counts(name):
    assert len(subgroups(catalog_monoid(name))) == SUBGROUP_COUNTS[name]


def test_subgroups_need_a_group():
    with pytest.raises(MonoidTableError):
        subgroups(catalog_monoid('T2'))


@pytest.mark.parametrize('name', sorted(SUBGROUP_COUNTS))
def test_groups_are_absolutely_closed(name):
    """Every subgroup of a finite group is its own dominion"""
    group = catalog_monoid(name)
    for H in subgroups(group):
        assert dominion(group, H) == H


def test_semilattice_submonoids_are_closed():
    S = semilattice(3)
    others = [i for i in range(S.size) if i != S.identity]
    for k in range(len(others) + 1):
        for chosen in combinations(others, k):
            U = frozenset((S.identity,) + chosen)
            assert dominion(S, U) == U


@pytest.mark.parametrize('name', ['C4', 'S3', 'T2', 'Chain3'])
def test_extreme_submonoids(name):
    S = catalog_monoid(name)
    everything = range(S.size)
    assert dominion(S, everything) == frozenset(everything)
    assert dominion(S, [S.identity]) == frozenset([S.identity])
    assert tensor_class_count(S, [S.identity]) == S.size ** 2
    assert tensor_class_count(S, everything) == S.size


def test_tensor_over_subgroup():
    """H acts freely on pairs, so S ⊗_H S has |S|²/|H| classes"""
    C6 = cyclic_group(6)
    H = submonoid_closure(C6, ['a3'])
    assert len(H) == 2
    assert tensor_class_count(C6, H) == 18


def test_tensor_relations():
    C6 = cyclic_group(6)
    quotient = tensor_product(C6, submonoid_closure(C6, ['a2']))
    # a1·a2 ⊗ a1 = a1 ⊗ a2·a1
    assert tensor_equal(quotient, 'a3', 'a1', 'a1', 'a3')
    assert not tensor_equal(quotient, 'a1', 'e', 'e', 'e')
    assert quotient.left_act('a1', 'e', 'e') == quotient.class_of('a1', 'e')
    assert quotient.right_act('e', 'e', 'a2') == quotient.class_of('a2', 'e')
    assert sum(len(c) for c in quotient.classes()) == 36


def test_submonoid_validation():
    S = catalog_monoid('S3')
    with pytest.raises(MonoidTableError):
        tensor_product(S, [1])
    with pytest.raises(MonoidTableError):
        S.submonoid(['e', 'nope'])


def test_table_validation():
    with pytest.raises(MonoidTableError):
        FiniteMonoid([[0, 0], [0, 0]])
    with pytest.raises(MonoidTableError):
        FiniteMonoid([[0, 1], [1, 2]])
    with pytest.raises(MonoidTableError):
        FiniteMonoid([[0, 1, 2], [1, 2, 0], [2, 0, 2]])
    with pytest.raises(MonoidTableError):
        FiniteMonoid([[0, 1]])


def test_load_csv(corpus):
    S = load_monoid(corpus / 's3.csv')
    assert S.name == 's3'
    assert S.names == ['e', 'r', 's', 'a', 'b', 'c']
    assert S.is_group()
    assert dominion(S, ['e', 'a']) == frozenset([0, 3])


def test_load_catalog():
    assert load_monoid('catalog:D4').size == 8


def test_malformed_csv(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text("e,x\n0,1\n1,z\n", encoding='utf-8')
    with pytest.raises(MonoidTableError):
        load_monoid(path)


def test_csv_round_trip(tmp_path):
    S = catalog_monoid('T2')
    path = tmp_path / 't2.csv'
    S.to_csv(path)
    again = FiniteMonoid.from_csv(path)
    assert (again.table == S.table).all()
    assert again.names == S.names


@pytest.fixture
def unary():
    return Alphabet(['a'])


def test_universal_group_of_idempotent(unary):
    system = RewritingSystem.from_pairs(unary, [(('a', 'a'), ('a',))])
    presentation = universal_group_presentation(system)
    assert presentation.generators == ('a',)
    assert presentation.relators == [('r1', ('a',))]


def test_universal_group_uses_the_pairing(c3_system):
    presentation = universal_group_presentation(c3_system)
    assert presentation.generators == ('a',)
    assert presentation.relators == [('r1', ('a', 'a', 'a'))]


def test_wdom_evidence(c3_system):
    verdict = weak_dominion_probe(c3_system, [('a',)], ('A',))
    assert isinstance(verdict, InWDomEvidence)
    assert verdict.witness == ((0, -1),)
    assert verdict.to_dict()['result'] == 'in_wdom'


def test_wdom_closed_subgroup_misses_element(unary):
    system = RewritingSystem.from_pairs(unary, [(('a',) * 6, ())])
    verdict = weak_dominion_probe(system, [('a', 'a')], ('a',))
    assert isinstance(verdict, NotInWDom)
    assert verdict.subgroup_order == 3
    assert verdict.to_dict() == {'result': 'not_in_wdom', 'subgroup_order': 3}


def test_wdom_infinite_subgroup_is_unknown():
    ab = Alphabet(['a', 'b'])
    system = RewritingSystem.from_pairs(ab, [(('b',), ())])
    verdict = weak_dominion_probe(system, [('a', 'a')], ('a',), subgroup_bound=4)
    assert isinstance(verdict, Unknown)


def test_wdom_incomplete_group_is_unknown(unary):
    system = RewritingSystem.from_pairs(unary, [(('a',) * 6, ())])
    verdict = weak_dominion_probe(system, [('a', 'a')], ('a',), max_rules=1)
    assert isinstance(verdict, Unknown)
