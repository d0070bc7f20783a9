"""Boundary maps ∂₁, ∂̃₂, ∂̃₃ with exact integer coefficients"""

from typing import List, Tuple

from ..rewriting import Edge
from ..utils.exceptions import ComplexError
from .cells import Orientation, PCell, SquareCell, ThreeCell, square
from .chains import Chain, chain_of_path


def boundary1(e: Edge) -> Chain:
    """∂₁ e = ιe - τe"""
    out = Chain(0)
    out.add_term(e.initial, 1)
    out.add_term(e.terminal, -1)
    return out


def boundary2(cell) -> Chain:
    """
    ∂₂[e,f] = e.ιf - e.τf + τe.f - ιe.f ; ∂̃₂[u,p,v] = Σ δᵢ u.fᵢ.v
    """
    if isinstance(cell, SquareCell):
        e, f = cell.e, cell.f
        out = Chain(1)
        out.add_term(e.translate((), f.initial), 1)
        out.add_term(e.translate((), f.terminal), -1)
        out.add_term(f.translate(e.terminal, ()), 1)
        out.add_term(f.translate(e.initial, ()), -1)
        return out
    if isinstance(cell, PCell):
        return chain_of_path(cell.boundary_path())
    raise ComplexError(f"not a 2-cell: {cell!r}")


def three_cell_faces(t: ThreeCell) -> List[Tuple[object, int]]:
    """
    Unsummed terms of ∂̃₃:

    [f,σ] -> ιf.σ - τf.σ + Σ εᵢ [f, eᵢ]
    [σ,f] -> σ.ιf - σ.τf - Σ εᵢ [eᵢ, f]
    where ∂̃₂σ = Σ εᵢ eᵢ.
    """
    f, sigma = t.edge, t.cell
    terms = []
    if t.orientation is Orientation.EDGE_FIRST:
        terms.append((sigma.translate(f.initial, ()), 1))
        terms.append((sigma.translate(f.terminal, ()), -1))
        for e_i, eps in boundary2(sigma).items():
            terms.append((square(f, e_i), eps))
    else:
        terms.append((sigma.translate((), f.initial), 1))
        terms.append((sigma.translate((), f.terminal), -1))
        for e_i, eps in boundary2(sigma).items():
            terms.append((square(e_i, f), -eps))
    return terms


def boundary3(t: ThreeCell) -> Chain:
    return Chain(2, three_cell_faces(t))


def boundary(cell, dimension: int) -> Chain:
    if dimension == 1:
        return boundary1(cell)
    if dimension == 2:
        return boundary2(cell)
    if dimension == 3:
        return boundary3(cell)
    if dimension == 0:
        return Chain(-1)
    raise ComplexError(f"no boundary map in dimension {dimension}")


def boundary_of_chain(chain: Chain) -> Chain:
    out = Chain(chain.dimension - 1)
    for cell, coef in chain.items():
        for face, k in boundary(cell, chain.dimension).items():
            out.add_term(face, coef * k)
    return out


__all__ = [
    'boundary1', 'boundary2', 'boundary3', 'three_cell_faces', 'boundary',
    'boundary_of_chain',
]
