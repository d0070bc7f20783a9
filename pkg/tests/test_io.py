"""Tests for presentation files, sequence literals, cycle files and reports"""

import json

import pytest

from src import __version__
from src.io import (
    build_report,
    chain_from_dict,
    chain_to_dict,
    error_report,
    parse_cycle,
    parse_presentation,
    parse_presentation_text,
    parse_sequence,
    serialize_presentation,
    write_report,
)
from src.peiffer import YSymbol
from src.pride import GroupPresentation, PrideSystem
from src.rewriting import RewritingSystem
from src.squier import boundary_of_chain
from src.utils.exceptions import ParseError


GROUP_FILES = ['trivial_x', 'xy_trivial', 'x_cubed', 'free_x', 'commutator']
MONOID_FILES = ['c3', 'idempotent']


def _rules(system):
    return [(rule.id, rule.lhs, rule.rhs) for rule in system]


@pytest.mark.parametrize('stem', GROUP_FILES)
def test_group_files(corpus, stem):
    parsed = parse_presentation(corpus / f'{stem}.pres')
    assert isinstance(parsed, GroupPresentation)
    assert parsed.name == stem


@pytest.mark.parametrize('stem', MONOID_FILES)
def test_monoid_files(corpus, stem):
    parsed = parse_presentation(corpus / f'{stem}.pres')
    assert isinstance(parsed, RewritingSystem)


def test_c3_file(corpus, c3_system):
    parsed = parse_presentation(corpus / 'c3.pres')
    assert _rules(parsed) == _rules(c3_system)
    assert parsed.alphabet.inverse_letter('a') == 'A'


def test_group_file_details(corpus):
    parsed = parse_presentation(corpus / 'xy_trivial.pres')
    assert parsed.generators == ('x', 'y')
    assert parsed.relators == [('r1', ('x',)), ('r2', ('y',))]
    assert parsed.distinguished == 'r2'
    commutator = parse_presentation(corpus / 'commutator.pres')
    assert commutator.relators[0][1] == ('x', 'y', 'x^-1', 'y^-1')
    assert parse_presentation(corpus / 'free_x.pres').relators == []


@pytest.mark.parametrize('stem', GROUP_FILES + MONOID_FILES)
def test_serialize_round_trip(corpus, stem):
    parsed = parse_presentation(corpus / f'{stem}.pres')
    again = parse_presentation_text(serialize_presentation(parsed))
    assert serialize_presentation(again) == serialize_presentation(parsed)
    if isinstance(parsed, GroupPresentation):
        assert again.relators == parsed.relators
        assert again.distinguished == parsed.distinguished
    else:
        assert _rules(again) == _rules(parsed)


def test_unlabelled_entries_and_index():
    text = """format: presentation/v1
kind: group
generators: x y
relators:
  x y x^-1 y^-1
  x x
distinguished: 2
"""
    parsed = parse_presentation_text(text)
    assert parsed.labels == ['r1', 'r2']
    assert parsed.distinguished == 'r2'


def test_unknown_letter_position():
    text = "format: presentation/v1\nkind: group\ngenerators: x\nrelators:\n  r1: x z\n"
    with pytest.raises(ParseError) as info:
        parse_presentation_text(text)
    assert info.value.line == 5
    assert info.value.column == 9
    assert info.value.to_dict()['code'] == 'parse'


def test_empty_relator_position():
    text = "format: presentation/v1\nkind: group\ngenerators: x\nrelators:\n  r1: 1\n"
    with pytest.raises(ParseError) as info:
        parse_presentation_text(text)
    assert info.value.line == 5


def test_empty_lhs():
    text = "format: presentation/v1\nkind: monoid\nletters: a\nrules:\n  1 -> a\n"
    with pytest.raises(ParseError) as info:
        parse_presentation_text(text)
    assert info.value.line == 5


def test_duplicate_relator_is_blamed_on_its_line():
    text = "format: presentation/v1\nkind: group\ngenerators: x\nrelators:\n  a: x\n  b: x^-1\n"
    with pytest.raises(ParseError) as info:
        parse_presentation_text(text)
    assert info.value.line == 6


@pytest.mark.parametrize('text', [
    "kind: group\ngenerators: x\n",
    "format: presentation/v2\nkind: group\ngenerators: x\n",
    "format: presentation/v1\nkind: ring\n",
    "format: presentation/v1\nkind: group\nletters: a\n",
    "format: presentation/v1\nkind: group\ncolour: red\n",
    "format: presentation/v1\nkind: group\n  r1: x\n",
])
def test_malformed_headers(text):
    with pytest.raises(ParseError):
        parse_presentation_text(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        parse_presentation(tmp_path / 'nothing.pres')


def test_sequence_literal(xy_trivial):
    s = parse_sequence("[(x y y^-1; r1; +1), (1; 2; -1)]", xy_trivial)
    assert s == (YSymbol(('x',), 'r1', 1), YSymbol((), 'r2', -1))
    assert parse_sequence("[]", xy_trivial) == ()


@pytest.mark.parametrize('text, column', [
    ("(1; r1; +1)", 1),
    ("[(1; r9; +1)]", 5),
    ("[(1; r1; 2)]", 9),
    ("[(z; r1; +1)]", 3),
])
def test_sequence_errors(xy_trivial, text, column):
    with pytest.raises(ParseError) as info:
        parse_sequence(text, xy_trivial)
    assert info.value.line == 1
    assert info.value.column == column


def test_cycle_file(tmp_path, trivial_x):
    """x x^-1 -> x^-1 -> 1 against x x^-1 -> 1"""
    system = PrideSystem(trivial_x).system
    data = {'cycle': [
        {'left': '1', 'rule': 'r1+', 'right': 'x^-1', 'coef': 1},
        {'left': '1', 'rule': 'r1-', 'right': '1', 'coef': 1},
        {'left': '1', 'rule': 't:x+', 'right': '1', 'coef': 1, 'sign': -1},
    ]}
    path = tmp_path / 'cycle.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    chain = parse_cycle(path, system)
    assert len(chain) == 3
    assert not boundary_of_chain(chain)
    assert chain_from_dict(chain_to_dict(chain), system) == chain


@pytest.mark.parametrize('data', [
    [],
    {'cycle': [{'left': '1'}]},
    {'cycle': [{'rule': 'nope'}]},
    {'cycle': [{'rule': 'r1+', 'left': 'q'}]},
    {'cycle': [{'rule': 'r1+', 'sign': 2}]},
])
def test_bad_cycles(trivial_x, data):
    with pytest.raises(ParseError):
        chain_from_dict(data, PrideSystem(trivial_x).system)


def test_invalid_cycle_json(tmp_path, trivial_x):
    path = tmp_path / 'cycle.json'
    path.write_text('{"cycle": [', encoding='utf-8')
    with pytest.raises(ParseError) as info:
        parse_cycle(path, PrideSystem(trivial_x).system)
    assert info.value.line == 1


def test_reports_are_deterministic(tmp_path):
    report = build_report('complete', {'b': 2, 'a': 1}, {'status': 'complete', 'n': 2 ** 60})
    assert report['version'] == __version__
    text = write_report(report, tmp_path / 'report.json')
    assert text == write_report(build_report('complete', {'a': 1, 'b': 2}, {'n': 2 ** 60, 'status': 'complete'}))
    loaded = json.loads((tmp_path / 'report.json').read_text(encoding='utf-8'))
    assert loaded['n'] == str(2 ** 60)
    with pytest.raises(ValueError):
        build_report('complete', {}, {'config': 1})


def test_error_report():
    report = error_report('build', {}, ParseError('bad', 3, 4))
    assert report['error'] == {'code': 'parse', 'message': 'bad (line 3, column 4)', 'line': 3, 'column': 4}
