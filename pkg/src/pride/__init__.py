"""
Pride Module
Group presentations, their Pride complexes, the loops Q/P/t and the asphericity probe
"""

from .presentation import GroupPresentation
from .system import PrideSystem, Relator, Trivial, to_pride_system
from .paths import (
    middle_out_path,
    trivial_tau_chain,
    cancellation_path,
    trivial_path,
    q_path,
    p_path,
    q_cycle,
    eta_rep,
)
from .loops import loop_for_t, loop_for_q, loop_for_p, t_loops, q_loops, pride_loops
from .psi0 import SIGNED, HAT, psi0_eval, psi0_symbol, symbol_presentation
from .probe import aspherical_probe, pride_truncation
from .audit import AuditEntry, remark_ir_audit, strip_context
from .shadows import pride_pair, translate_cycle_right, commutator_shadow

__all__ = [
    'GroupPresentation', 'PrideSystem', 'Relator', 'Trivial', 'to_pride_system',
    'middle_out_path', 'trivial_tau_chain', 'cancellation_path', 'trivial_path',
    'q_path', 'p_path', 'q_cycle', 'eta_rep',
    'loop_for_t', 'loop_for_q', 'loop_for_p', 't_loops', 'q_loops', 'pride_loops',
    'SIGNED', 'HAT', 'psi0_eval', 'psi0_symbol', 'symbol_presentation',
    'aspherical_probe', 'pride_truncation',
    'AuditEntry', 'remark_ir_audit', 'strip_context',
    'pride_pair', 'translate_cycle_right', 'commutator_shadow',
]
