"""ψ₀: paths of the Pride complex to Y-sequences"""

from typing import Iterable

from ..peiffer.symbols import YSequence, YSymbol
from ..rewriting import Edge
from ..utils.exceptions import PresentationError
from .presentation import HAT_SUFFIX
from .system import PrideSystem, Relator

SIGNED = 'signed'
HAT = 'hat'
TAGGINGS = (SIGNED, HAT)


def psi0_symbol(pride: PrideSystem, e: Edge, tagging: str = SIGNED):
    """
    The symbol of one edge, or None for trivial edges.

    signed: (u, r^η -> 1, ε, v) gives (^[u] r)^{η ε}
    hat:    it gives (^[u] r)^ε, or (^[u] r~)^ε when η = -1
    """
    tag = pride.tag(e.rule)
    if not isinstance(tag, Relator):
        return None
    u = pride.alphabet.free_reduce(e.left)
    if tagging == SIGNED:
        return YSymbol(u, tag.label, tag.sign * e.sign)
    if tagging == HAT:
        label = tag.label if tag.sign > 0 else tag.label + HAT_SUFFIX
        return YSymbol(u, label, e.sign)
    raise PresentationError(f"unknown tagging {tagging!r}; expected one of {TAGGINGS}")


def psi0_eval(pride: PrideSystem, path: Iterable[Edge], tagging: str = SIGNED) -> YSequence:
    """
    Y-sequence of a path in (𝒟, 𝐭), trivial edges skipped

    Args:
        pride: Pride system the path lives in
        path: Path or any iterable of edges
        tagging: 'signed' (symbols over 𝐫) or 'hat' (symbols over 𝐫 ∪ 𝐫⁻¹)
    """
    out = []
    for e in path:
        symbol = psi0_symbol(pride, e, tagging)
        if symbol is not None:
            out.append(symbol)
    return tuple(out)


def symbol_presentation(pride: PrideSystem, tagging: str = SIGNED):
    """Presentation whose relators the symbols of `tagging` refer to"""
    if tagging == HAT:
        return pride.presentation.doubled()
    return pride.presentation
