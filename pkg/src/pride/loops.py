"""The loops 𝐭, 𝐪 and 𝐩 attached to a Pride complex"""

from typing import List

from ..rewriting import Edge, Path
from ..squier import LoopDef
from .paths import p_path, q_path
from .system import PrideSystem


T_KIND = 't'
Q_KIND = 'q'
P_KIND = 'p'


def loop_for_t(pride: PrideSystem, generator: str, sign: int) -> LoopDef:
    """
    t = 𝔸 ∘ 𝔹⁻¹ at x^ε x^-ε x^ε, with
    𝔸 = (1, x^ε x^-ε, 1, x^ε) and 𝔹 = (x^ε, x^-ε x^ε, 1, 1)
    """
    a = pride.letter(generator, sign)
    b = pride.alphabet.inverse_letter(a)
    first = Edge((), pride.cancel_rule(a), 1, (a,))
    second = Edge((a,), pride.cancel_rule(b), 1, ())
    suffix = '+' if sign > 0 else '-'
    return LoopDef(f"t_{generator}{suffix}", T_KIND, Path.of([first, second.inverse()]),
                   critical_pair=(first, second), params=(generator, sign))


def _relator_peak_pair(pride: PrideSystem, label: str):
    """(1, r, 1, r⁻¹) and the cancellation of r's last letter against r⁻¹, both at rr⁻¹"""
    r = pride.presentation.relator(label)
    head, last = r[:-1], r[-1]
    return (Edge((), pride.relator_rule(label, 1), 1, pride.inverse(r)),
            Edge(head, pride.cancel_rule(last), 1, pride.inverse(head)))


def loop_for_q(pride: PrideSystem, label: str) -> LoopDef:
    return LoopDef(f"q_{label}", Q_KIND, q_path(pride, label),
                   critical_pair=_relator_peak_pair(pride, label), params=(label,))


def loop_for_p(pride: PrideSystem, label: str) -> LoopDef:
    return LoopDef(f"p_{label}", P_KIND, p_path(pride, label),
                   critical_pair=_relator_peak_pair(pride, label), params=(label,))


def t_loops(pride: PrideSystem) -> List[LoopDef]:
    return [loop_for_t(pride, x, sign) for x in pride.presentation.generators for sign in (1, -1)]


def q_loops(pride: PrideSystem) -> List[LoopDef]:
    return [loop_for_q(pride, label) for label in pride.presentation.labels]


def pride_loops(pride: PrideSystem) -> List[LoopDef]:
    """𝐪 ∪ 𝐭"""
    return q_loops(pride) + t_loops(pride)
