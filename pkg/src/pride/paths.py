"""
Trivial paths, the loops Q(r,u) and P(r,u), and the cycles q(r,u)

All paths are based at the empty word and composed left to right.
"""

from ..rewriting import Edge, Path, compose
from ..squier import Chain, chain_of_path
from ..utils.exceptions import PathError
from ..words import Alphabet, Word
from .system import PrideSystem


def middle_out_path(pride: PrideSystem, u: Word) -> Path:
    """
    uu⁻¹ -> 1 through t_u^(n), ..., t_u^(1), where
    t_u^(i) = (x₁…x_{i-1}, x_i x_i⁻¹ -> 1, +1, x_{i-1}⁻¹…x₁⁻¹)
    """
    u = tuple(u)
    inv = pride.inverse
    edges = []
    for i in range(len(u), 0, -1):
        head = u[:i - 1]
        edges.append(Edge(head, pride.cancel_rule(u[i - 1]), 1, inv(head)))
    return Path.of(edges, base=u + inv(u))


def trivial_tau_chain(pride: PrideSystem, u: Word) -> Chain:
    """τ_{uu⁻¹} = t_u^(1) + ... + t_u^(|u|)"""
    return chain_of_path(middle_out_path(pride, u))


def cancellation_path(pride: PrideSystem, w: Word) -> Path:
    """Positive trivial path w -> w*, always cancelling the leftmost adjacent inverse pair"""
    w = tuple(w)
    inv_letter = pride.alphabet.inverse_letter
    edges = []
    current = w
    k = 0
    while k < len(current) - 1:
        if current[k + 1] == inv_letter(current[k]):
            edges.append(Edge(current[:k], pride.cancel_rule(current[k]), 1, current[k + 2:]))
            current = current[:k] + current[k + 2:]
            k = max(k - 1, 0)
        else:
            k += 1
    return Path.of(edges, base=w)


def trivial_path(pride: PrideSystem, w: Word) -> Path:
    """T_W, from the free reduction W* up to W"""
    return cancellation_path(pride, w).inverse()


def q_path(pride: PrideSystem, label: str, u: Word = ()) -> Path:
    """
    Q(r,u) = T_{urr⁻¹u⁻¹} ∘ (u, r, +1, r⁻¹u⁻¹) ∘ (u, r⁻¹, +1, u⁻¹) ∘ T⁻¹_{uu⁻¹}

    Both trivial segments are middle-out, so chain_of_path(Q) = q(r,u).
    """
    u = tuple(u)
    r = pride.presentation.relator(label)
    r_inv, u_inv = pride.inverse(r), pride.inverse(u)
    return compose(
        middle_out_path(pride, u + r).inverse(),
        Path.of([
            Edge(u, pride.relator_rule(label, 1), 1, r_inv + u_inv),
            Edge(u, pride.relator_rule(label, -1), 1, u_inv),
        ]),
        middle_out_path(pride, u),
    )


def p_path(pride: PrideSystem, label: str, u: Word = ()) -> Path:
    """
    P(r,u) = T_{(uru⁻¹)(ur⁻¹u⁻¹)} ∘ (u, r, +1, u⁻¹ur⁻¹u⁻¹)
             ∘ (T⁻¹_{uu⁻¹}.ur⁻¹u⁻¹) ∘ (u, r⁻¹, +1, u⁻¹) ∘ T⁻¹_{uu⁻¹}
    """
    u = tuple(u)
    r = pride.presentation.relator(label)
    r_inv, u_inv = pride.inverse(r), pride.inverse(u)
    w = u + r + u_inv + u + r_inv + u_inv
    top = trivial_path(pride, w)
    if top.initial:
        raise PathError(f"{Alphabet.format(w)} does not freely reduce to 1")
    return compose(
        top,
        Path.of([Edge(u, pride.relator_rule(label, 1), 1, u_inv + u + r_inv + u_inv)]),
        middle_out_path(pride, u).translate((), u + r_inv + u_inv),
        Path.of([Edge(u, pride.relator_rule(label, -1), 1, u_inv)]),
        middle_out_path(pride, u),
    )


def q_cycle(pride: PrideSystem, label: str, u: Word = ()) -> Chain:
    """q(r,u) = (u, r, 1, r⁻¹u⁻¹) + (u, r⁻¹, 1, u⁻¹) + τ_{uu⁻¹} - τ_{urr⁻¹u⁻¹}"""
    u = tuple(u)
    r = pride.presentation.relator(label)
    r_inv, u_inv = pride.inverse(r), pride.inverse(u)
    out = Chain(1)
    out.add_term(Edge(u, pride.relator_rule(label, 1), 1, r_inv + u_inv), 1)
    out.add_term(Edge(u, pride.relator_rule(label, -1), 1, u_inv), 1)
    return out + trivial_tau_chain(pride, u) - trivial_tau_chain(pride, u + r)


def eta_rep(pride: PrideSystem, label: str) -> Path:
    """η(r): the single edge (1, r -> 1, +1, 1)"""
    return Path.of([Edge((), pride.relator_rule(label, 1), 1, ())])
