"""
Command dispatch

Each handler takes a RunConfig and returns (exit code, result fields).
Exit codes: 0 success, 1 error, 2 inconclusive.
"""

from typing import Callable, Dict, List, Tuple

from ..actions import (
    InWDomEvidence,
    NotInWDom,
    dominion,
    tensor_product,
    weak_dominion_probe,
)
from ..homology import INCONCLUSIVE_CAVEAT, Witness, composition_is_zero, homology, is_boundary
from ..io import (
    build_report,
    error_report,
    load_monoid,
    parse_cycle,
    parse_presentation,
    parse_sequence,
    read_sequence,
)
from ..peiffer import (
    NoPairing,
    PeifferCalculus,
    PrimaryPairing,
    Reduced,
    trace_to_dicts,
)
from ..pride import (
    GroupPresentation,
    PrideSystem,
    aspherical_probe,
    pride_loops,
    q_loops,
    t_loops,
)
from ..rewriting import (
    CompletedSystemNormalForms,
    ConfluentOnBound,
    FreeGroupNormalForms,
    Resolvable,
    RewritingSystem,
    Unknown,
    Unresolved,
    critical_pairs,
    is_complete,
    is_resolvable,
    knuth_bendix,
    newman_confluence_check,
    normalize_path,
)
from ..squier import build_truncated, resolution_loops
from ..utils.exceptions import ConfigError, SquierLabError
from ..utils.logger import set_level, setup_logger
from ..words import Alphabet
from .config import RunConfig


logger = setup_logger('CLI')

OK, ERROR, INCONCLUSIVE = 0, 1, 2

Result = Tuple[int, Dict]


# -- shared helpers -------------------------------------------------------


def _load(config: RunConfig):
    return parse_presentation(config.input(0))


def _group(config: RunConfig) -> GroupPresentation:
    parsed = _load(config)
    if not isinstance(parsed, GroupPresentation):
        raise ConfigError(f"command {config.command!r} needs a group presentation")
    return parsed


def _system(parsed) -> RewritingSystem:
    if isinstance(parsed, GroupPresentation):
        return PrideSystem(parsed).system
    return parsed


def _rule_dict(rule) -> Dict:
    return {'id': rule.id, 'lhs': Alphabet.format(rule.lhs), 'rhs': Alphabet.format(rule.rhs)}


def _pride_families(config: RunConfig, parsed):
    """Loops of the Pride complex named by --p-cells"""
    if not isinstance(parsed, GroupPresentation):
        raise ConfigError("--p-cells needs a group presentation")
    pride = PrideSystem(parsed)
    builders = {'q': q_loops, 't': t_loops}
    loops = []
    for family in dict.fromkeys(config.loop_families):
        loops.extend(builders[family](pride))
    return loops


def _loops(config: RunConfig, parsed, system: RewritingSystem):
    if config.loop_families:
        return _pride_families(config, parsed)
    choice = config.loops
    if choice == 'auto':
        if isinstance(parsed, GroupPresentation):
            choice = 'pride'
        elif is_complete(system, config.step_limit):
            choice = 'resolution'
        else:
            logger.warning("System is not complete; building without loop cells")
            choice = 'none'
    if choice == 'none':
        return []
    if choice == 'pride':
        if not isinstance(parsed, GroupPresentation):
            raise ConfigError("pride loops need a group presentation")
        return pride_loops(PrideSystem(parsed))
    return resolution_loops(system, config.step_limit)


def _truncation(config: RunConfig, with_3_cells: bool = None):
    config.require('length_bound')
    parsed = _load(config)
    system = _system(parsed)
    X = build_truncated(system, config.length_bound, _loops(config, parsed, system),
                        with_3_cells=config.three_cells if with_3_cells is None else with_3_cells,
                        max_cells=config.max_cells, margin=config.margin,
                        show_progress=config.show_progress)
    return system, X


def group_normal_forms(presentation: GroupPresentation, config: RunConfig):
    """Definitive normal forms for the group, or None when completion stops"""
    if not presentation.relators:
        return FreeGroupNormalForms(presentation.alphabet)
    completion = knuth_bendix(PrideSystem(presentation).system, config.max_rules, config.max_lhs_len,
                              config.interreduce, config.step_limit)
    if not completion.is_complete:
        logger.info(f"No complete system for {presentation!r}: {completion.reason}")
        return None
    return CompletedSystemNormalForms(completion.system, config.step_limit)


def _cells(chain) -> List[Dict]:
    terms = [{'cell': str(cell), 'coef': coef} for cell, coef in chain.items()]
    return sorted(terms, key=lambda d: d['cell'])


# -- commands -----------------------------------------------------------------


def cmd_complete(config: RunConfig) -> Result:
    system = _system(_load(config))
    result = knuth_bendix(system, config.max_rules, config.max_lhs_len, config.interreduce,
                          config.step_limit)
    fields = {
        'status': result.status.value,
        'rounds': result.rounds,
        'rules': [_rule_dict(rule) for rule in result.system],
        'added': [rule.id for rule in result.added_rules],
        'reason': result.reason,
    }
    return (OK if result.is_complete else INCONCLUSIVE), fields


def cmd_normalize(config: RunConfig) -> Result:
    config.require('word')
    system = _system(_load(config))
    w = system.alphabet.parse(config.word)
    path = normalize_path(w, system, config.step_limit)
    return OK, {
        'word': Alphabet.format(w),
        'normal_form': Alphabet.format(path.terminal),
        'steps': len(path),
        'path': [str(e) for e in path],
    }


def cmd_pairs(config: RunConfig) -> Result:
    system = _system(_load(config))
    pairs = []
    code = OK
    for cp in critical_pairs(system):
        entry = {
            'kind': cp.kind.value,
            'word': Alphabet.format(cp.overlap_word),
            'edge_a': str(cp.edge_a),
            'edge_b': str(cp.edge_b),
        }
        verdict = is_resolvable(cp, system, config.step_limit)
        if isinstance(verdict, Resolvable):
            entry.update(status='resolvable', common=Alphabet.format(verdict.common))
        elif isinstance(verdict, Unresolved):
            entry.update(status='unresolved', normal_forms=[Alphabet.format(verdict.normal_a),
                                                            Alphabet.format(verdict.normal_b)])
        else:
            entry.update(status='unknown', reason=verdict.reason)
            code = INCONCLUSIVE
        pairs.append(entry)
    return code, {'pairs': pairs, 'count': len(pairs)}


def cmd_confluent(config: RunConfig) -> Result:
    system = _system(_load(config))
    verdict = newman_confluence_check(system, config.confluence_bound, config.step_limit)
    if isinstance(verdict, ConfluentOnBound):
        return OK, {'confluent_on_bound': True, 'words_checked': verdict.words_checked}
    return OK, {
        'confluent_on_bound': False,
        'counterexample': Alphabet.format(verdict.word),
        'normal_forms': [Alphabet.format(w) for w in verdict.normal_forms],
    }


def cmd_build(config: RunConfig) -> Result:
    _, X = _truncation(config)
    top = 3 if config.three_cells else 2
    problems = X.audit_closure()
    checks = {f"d{k}d{k + 1}": composition_is_zero(X, k) for k in range(1, top)}
    fields = {
        'census': X.census(),
        'closed': not problems,
        'missing_faces': problems[:20],
        'composition_zero': checks,
    }
    ok = not problems and all(checks.values())
    return (OK if ok else ERROR), fields


def cmd_homology(config: RunConfig) -> Result:
    _, X = _truncation(config)
    top = 3 if config.three_cells else 2
    dims = [config.dimension] if config.dimension is not None else list(range(top + 1))
    groups = {str(k): homology(X, k).to_dict() for k in dims}
    return OK, {'census': X.census(), 'homology': groups, 'caveat': INCONCLUSIVE_CAVEAT}


def cmd_boundary_check(config: RunConfig) -> Result:
    system, X = _truncation(config)
    chain = parse_cycle(config.cycle or config.input(1), system)
    verdict = is_boundary(chain, X)
    if isinstance(verdict, Witness):
        return OK, {'boundary': True, 'preimage': _cells(verdict.preimage)}
    return (OK if verdict.definitive else INCONCLUSIVE), {
        'boundary': False,
        'inner': verdict.inner,
        'caveat': verdict.caveat,
    }


def cmd_aspherical(config: RunConfig) -> Result:
    config.require('length_bound')
    presentation = _group(config)
    report = aspherical_probe(presentation, config.length_bound, config.margin,
                              max_cells=config.max_cells, show_progress=config.show_progress)
    fields = report.to_dict(include_cycles=config.report == 'cycles')
    fields['presentation'] = repr(presentation)
    return (OK if not report.unbounded else INCONCLUSIVE), fields


def cmd_peiffer(config: RunConfig) -> Result:
    if config.sequence is None and config.sequence_file is None:
        raise ConfigError(f"command {config.command!r} needs --sequence or --seq")
    presentation = _group(config)
    calculus = PeifferCalculus(presentation)
    if config.sequence_file is not None:
        s = read_sequence(config.sequence_file, presentation)
    else:
        s = parse_sequence(config.sequence, presentation)
    provider = group_normal_forms(presentation, config)
    oracle = provider.equal if provider is not None else (lambda u, v: None)

    fields = {
        'sequence': [str(a) for a in s],
        'theta': Alphabet.format(calculus.theta_eval(s)),
        'identity_sequence': calculus.is_identity_sequence(s),
    }
    if provider is not None:
        image = calculus.relation_module_image(s, provider)
        fields['relation_module'] = image.to_dict() if not isinstance(image, Unknown) else None

    pairing = calculus.find_primary_pairing(s, oracle)
    if isinstance(pairing, PrimaryPairing):
        fields['pairing'] = [list(p) for p in pairing.pairs]
    elif isinstance(pairing, NoPairing):
        fields['pairing'] = None
        fields['reason'] = pairing.reason
        return OK, fields
    else:
        fields['pairing'] = None
        fields['reason'] = pairing.reason
        return INCONCLUSIVE, fields

    outcome = calculus.reduce_primary(s, oracle, max_steps=config.max_steps,
                                      max_states=config.max_states)
    if isinstance(outcome, Reduced):
        fields['reduced'] = True
        fields['trace'] = trace_to_dicts(outcome.trace)
        return OK, fields
    fields['reduced'] = False
    fields['reason'] = str(outcome.cause)
    return INCONCLUSIVE, fields


def cmd_dominion(config: RunConfig) -> Result:
    config.require('sub')
    monoid = load_monoid(config.input(0))
    U = monoid.submonoid(x.strip() for x in config.sub.split(',') if x.strip())
    quotient = tensor_product(monoid, U)
    dom = dominion(monoid, U, quotient)
    return OK, {
        'monoid': monoid.name,
        'order': monoid.size,
        'submonoid': [monoid.names[i] for i in sorted(U)],
        'dominion': [monoid.names[i] for i in sorted(dom)],
        'dominion_indices': sorted(dom),
        'tensor_classes': quotient.class_count(),
        'closed': dom == U,
    }


def cmd_wdom_probe(config: RunConfig) -> Result:
    config.require('sub', 'element')
    system = _system(_load(config))
    generators = [system.alphabet.parse(t) for t in config.sub.split(',') if t.strip()]
    d = system.alphabet.parse(config.element)
    verdict = weak_dominion_probe(system, generators, d, max_rules=config.max_rules,
                                  max_lhs_len=config.max_lhs_len,
                                  subgroup_bound=config.subgroup_bound)
    if isinstance(verdict, (InWDomEvidence, NotInWDom)):
        return OK, verdict.to_dict()
    return INCONCLUSIVE, {'result': 'unknown', 'reason': verdict.reason}


COMMAND_HANDLERS: Dict[str, Callable[[RunConfig], Result]] = {
    'complete': cmd_complete,
    'normalize': cmd_normalize,
    'pairs': cmd_pairs,
    'confluent': cmd_confluent,
    'build': cmd_build,
    'homology': cmd_homology,
    'boundary-check': cmd_boundary_check,
    'aspherical': cmd_aspherical,
    'peiffer': cmd_peiffer,
    'dominion': cmd_dominion,
    'wdom-probe': cmd_wdom_probe,
}


def run(config: RunConfig) -> Tuple[int, Dict]:
    """
    Execute one command

    Args:
        config: Validated RunConfig

    Returns:
        (exit code, JSON-ready report)
    """
    set_level(config.settings['logging']['level'])
    handler = COMMAND_HANDLERS[config.command]
    try:
        code, fields = handler(config)
    except SquierLabError as exc:
        logger.error(f"{config.command} failed: {exc}")
        return ERROR, error_report(config.command, config.to_dict(), exc)
    return code, build_report(config.command, config.to_dict(), fields)
