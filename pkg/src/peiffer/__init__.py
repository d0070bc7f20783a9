"""
Peiffer Module
Y-sequences, Peiffer operations, bounded equivalence searches and the relation module image
"""

from .symbols import (
    YSymbol,
    YSequence,
    UpsilonLetter,
    UpsilonWord,
    sequence,
    upsilon_word,
    u_generator,
    is_u_generator,
    is_u_product,
    format_sequence,
)
from .steps import LEFT, RIGHT, PeifferStep, exchange_step, delete_step, insert_step, trace_to_dicts
from .calculus import PeifferCalculus
from .searches import (
    EquivalentWithTrace,
    PrimaryPairing,
    NoPairing,
    Reduced,
    Failure,
    InWeakDominionEvidence,
    CentralityWitness,
    equivalent_bounded,
    find_primary_pairing,
    reduce_primary,
    insertion_normal_probe,
    centrality_witness,
)
from .relation_module import RelationModuleElement, relation_module_image
from .operations import (
    theta_eval,
    is_identity_sequence,
    peiffer_exchange,
    peiffer_delete,
    peiffer_insert,
    replay,
    include_subpresentation,
)

__all__ = [
    'YSymbol', 'YSequence', 'UpsilonLetter', 'UpsilonWord', 'sequence', 'upsilon_word',
    'u_generator', 'is_u_generator', 'is_u_product', 'format_sequence',
    'LEFT', 'RIGHT', 'PeifferStep', 'exchange_step', 'delete_step', 'insert_step', 'trace_to_dicts',
    'PeifferCalculus',
    'EquivalentWithTrace', 'PrimaryPairing', 'NoPairing', 'Reduced', 'Failure',
    'InWeakDominionEvidence', 'CentralityWitness', 'equivalent_bounded', 'find_primary_pairing',
    'reduce_primary', 'insertion_normal_probe', 'centrality_witness',
    'RelationModuleElement', 'relation_module_image',
    'theta_eval', 'is_identity_sequence', 'peiffer_exchange', 'peiffer_delete', 'peiffer_insert',
    'replay', 'include_subpresentation',
]
