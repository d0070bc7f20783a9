"""Tests for the run configuration, command handlers and the argparse entry point"""

import json

import pytest

from src.cli import RunConfig, build_parser, main, run
from src.utils.exceptions import ConfigError


def _run(command, *inputs, **options):
    code, report = run(RunConfig(command, [str(p) for p in inputs], **options))
    assert report['command'] == command
    return code, report


def test_defaults_come_from_yaml():
    config = RunConfig('complete', ['x.pres'])
    assert config.margin == 2
    assert config.max_rules == 200
    assert config.to_dict()['inputs'] == ['x.pres']
    assert 'output' not in config.to_dict()


def test_config_file_overrides(tmp_path):
    path = tmp_path / 'override.yaml'
    path.write_text("complex:\n  margin: 0\nrewriting:\n  max_rules: 5\n", encoding='utf-8')
    config = RunConfig('build', ['x.pres'], config_path=str(path))
    assert config.margin == 0
    assert config.max_rules == 5


@pytest.mark.parametrize('options', [
    {'command': 'frobnicate'},
    {'command': 'build', 'length_bound': 1, 'margin': 2},
    {'command': 'build', 'length_bound': -1},
    {'command': 'build', 'margin': -1},
    {'command': 'build', 'max_cells': 0},
    {'command': 'build', 'loops': 'some'},
    {'command': 'homology', 'dimension': -1},
    {'command': 'build', 'p_cells': 'q,x'},
    {'command': 'build', 'p_cells': ','},
    {'command': 'aspherical', 'report': 'everything'},
    {'command': 'peiffer', 'sequence': '[]', 'sequence_file': 'seq.txt'},
])
def test_invalid_configs(options):
    with pytest.raises(ConfigError):
        RunConfig(inputs=['x.pres'], **options)


def test_complete(corpus):
    code, report = _run('complete', corpus / 'c3.pres')
    assert code == 0
    assert report['status'] == 'complete'
    assert len(report['rules']) == 4


def test_normalize(corpus):
    code, report = _run('normalize', corpus / 'c3.pres', word='a a a a')
    assert code == 0
    assert report['normal_form'] == 'a'
    assert report['steps'] == len(report['path'])


def test_confluent_finds_a_counterexample(corpus):
    """aaaA reduces to both A and aa before completion"""
    code, report = _run('confluent', corpus / 'c3.pres', confluence_bound=4)
    assert code == 0
    assert report['confluent_on_bound'] is False


def test_pairs(corpus):
    code, report = _run('pairs', corpus / 'c3.pres')
    assert code == 0
    assert report['count'] == len(report['pairs']) > 0
    assert any(p['status'] == 'unresolved' for p in report['pairs'])


def test_build(corpus):
    code, report = _run('build', corpus / 'trivial_x.pres', length_bound=2, margin=0)
    assert code == 0
    assert report['closed']
    assert report['census']['n2_p'] == 1
    assert all(report['composition_zero'].values())


def test_homology(corpus):
    code, report = _run('homology', corpus / 'trivial_x.pres', length_bound=2, margin=0, dimension=1)
    assert code == 0
    assert report['homology'] == {'1': {'betti': 1, 'torsion': []}}


def test_aspherical(corpus):
    code, report = _run('aspherical', corpus / 'trivial_x.pres', length_bound=6, margin=2)
    assert code == 0
    assert report['verdict'] == 'consistent'
    assert 'cycles' not in report


def test_aspherical_cycle_listing(corpus):
    code, report = _run('aspherical', corpus / 'trivial_x.pres', length_bound=6, margin=2, report='cycles')
    assert code == 0
    assert report['cycles'] == []


def test_aspherical_report_is_byte_stable(corpus, tmp_path, capsys):
    argv = ['aspherical', str(corpus / 'trivial_x.pres'), '--truncate', '6', '--margin', '2',
            '--report', 'cycles']
    printed, written = [], []
    for n in range(2):
        out = tmp_path / f'report{n}.json'
        assert main(argv + ['-o', str(out)]) == 0
        printed.append(capsys.readouterr().out)
        written.append(out.read_bytes())
    assert printed[0] == printed[1]
    assert written[0] == written[1]
    report = json.loads(printed[0])
    assert report['verdict'] == 'consistent'
    assert report['bounded'] == 102


def test_aspherical_needs_a_group(corpus):
    code, report = _run('aspherical', corpus / 'c3.pres', length_bound=4)
    assert code == 1
    assert report['error']['code'] == 'config'


def test_peiffer(corpus):
    code, report = _run('peiffer', corpus / 'trivial_x.pres', sequence='[(x; r1; +1), (1; r1; -1)]')
    assert code == 0
    assert report['identity_sequence'] is True
    assert report['theta'] == '1'
    assert report['reduced'] is True
    assert report['trace'][-1]['op'] == 'delete'


def test_peiffer_reduce_reads_a_sequence_file(corpus, tmp_path, capsys):
    seq = tmp_path / 'seq.txt'
    seq.write_text("[(x; r1; +1),\n (1; r1; -1)]\n", encoding='utf-8')
    code = main(['peiffer', 'reduce', str(corpus / 'trivial_x.pres'), '--sequence', str(seq),
                 '--max-steps', '32'])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report['reduced'] is True
    assert report['config']['action'] == 'reduce'
    assert report['config']['inputs'] == [str(corpus / 'trivial_x.pres')]
    assert report['config']['max_steps'] == 32


def test_peiffer_missing_sequence_file(corpus, tmp_path):
    code, report = _run('peiffer', corpus / 'trivial_x.pres', sequence_file=str(tmp_path / 'none.txt'))
    assert code == 1
    assert report['error']['code'] == 'parse'


def test_complete_without_interreduction(corpus):
    config = RunConfig('complete', [str(corpus / 'c3.pres')], no_interreduce=True)
    assert config.interreduce is False
    assert RunConfig('complete', ['x.pres']).interreduce is True
    code, report = run(config)
    assert code == 0
    assert report['status'] == 'complete'
    assert len(report['rules']) >= 4


def test_build_with_chosen_loop_families(corpus):
    """At L=2 only the q loop at x x^-1 fits; the t loops live at length 3"""
    _, default = _run('build', corpus / 'trivial_x.pres', length_bound=2, margin=0)
    _, both = _run('build', corpus / 'trivial_x.pres', length_bound=2, margin=0, p_cells='q,t')
    _, t_only = _run('build', corpus / 'trivial_x.pres', length_bound=2, margin=0, p_cells='t')
    assert both['census'] == default['census']
    assert t_only['census']['n2_p'] == 0


def test_p_cells_need_a_group(corpus):
    code, report = _run('build', corpus / 'c3.pres', length_bound=2, margin=0, p_cells='q')
    assert code == 1
    assert report['error']['code'] == 'config'


def test_boundary_check_cycle_flag(corpus, tmp_path):
    data = {'cycle': [
        {'left': '1', 'rule': 'r1+', 'right': 'x^-1', 'coef': 1},
        {'left': '1', 'rule': 'r1-', 'right': '1', 'coef': 1},
        {'left': '1', 'rule': 't:x+', 'right': '1', 'coef': 1, 'sign': -1},
    ]}
    path = tmp_path / 'cycle.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    pres = corpus / 'trivial_x.pres'
    code, flagged = _run('boundary-check', pres, cycle=str(path), length_bound=4, margin=0)
    _, positional = _run('boundary-check', pres, path, length_bound=4, margin=0)
    assert code in (0, 2)
    assert 'boundary' in flagged
    flagged.pop('config')
    positional.pop('config')
    assert flagged == positional


def test_dominion(corpus):
    code, report = _run('dominion', corpus / 's3.csv', sub='0,3')
    assert code == 0
    assert report['submonoid'] == ['e', 'a']
    assert report['dominion'] == ['e', 'a']
    assert report['dominion_indices'] == [0, 3]
    assert report['tensor_classes'] == 18
    assert report['closed'] is True


def test_dominion_by_name(corpus):
    code, report = _run('dominion', corpus / 's3.csv', sub='e,a')
    assert code == 0
    assert report['dominion_indices'] == [0, 3]


def test_wdom_probe(corpus):
    code, report = _run('wdom-probe', corpus / 'c3.pres', sub='a', element='A')
    assert code == 0
    assert report['result'] == 'in_wdom'


@pytest.mark.parametrize('command, options', [
    ('normalize', {}),
    ('peiffer', {}),
    ('dominion', {}),
    ('build', {}),
])
def test_missing_arguments(corpus, command, options):
    code, report = _run(command, corpus / 'trivial_x.pres', **options)
    assert code == 1
    assert report['error']['code'] == 'config'


def test_bad_input_file(tmp_path):
    path = tmp_path / 'broken.pres'
    path.write_text("format: presentation/v1\nkind: group\ngenerators: x\nrelators:\n  r1: x z\n",
                    encoding='utf-8')
    code, report = _run('complete', path)
    assert code == 1
    assert report['error']['code'] == 'parse'
    assert report['error']['line'] == 5


def test_parser_flags():
    args = build_parser().parse_args(['homology', 'a.pres', '-L', '4', '--dim', '1', '--three-cells'])
    assert args.length_bound == 4
    assert args.dimension == 1
    assert args.three_cells


def test_parser_flags_for_every_command():
    parser = build_parser()
    args = parser.parse_args(['complete', 'a.pres', '--no-interreduce'])
    assert args.no_interreduce
    args = parser.parse_args(['build', 'a.pres', '--truncate', '4', '--p-cells', 'q,t'])
    assert args.p_cells == 'q,t'
    args = parser.parse_args(['boundary-check', 'a.pres', '--cycle', 'c.json', '-L', '5'])
    assert args.cycle == 'c.json'
    args = parser.parse_args(['aspherical', 'a.pres', '-L', '6', '--report', 'cycles'])
    assert args.report == 'cycles'
    args = parser.parse_args(['peiffer', 'reduce', 'a.pres', '--sequence', 's.txt', '--max-steps', '8'])
    assert args.inputs == ['reduce', 'a.pres']
    assert args.sequence_file == 's.txt'
    assert args.sequence is None
    config = RunConfig(**vars(args))
    assert config.action == 'reduce'
    assert config.inputs == ['a.pres']


def test_main_prints_report(corpus, tmp_path, capsys):
    out = tmp_path / 'report.json'
    code = main(['dominion', str(corpus / 's3.csv'), '--sub', '0,3', '-o', str(out)])
    assert code == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed == json.loads(out.read_text(encoding='utf-8'))
    assert printed['dominion'] == ['e', 'a']


def test_main_reports_config_errors(corpus, capsys):
    code = main(['build', str(corpus / 'trivial_x.pres'), '--truncate', '1', '--margin', '3'])
    assert code == 1
    assert json.loads(capsys.readouterr().out)['error']['code'] == 'config'
