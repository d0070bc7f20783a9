"""Finite shadows of homotopy statements on Pride complexes"""

from typing import Tuple

from ..homology import RelativePair
from ..rewriting import Path
from ..squier import Chain, build_truncated, chain_of_path, square
from ..squier.complex import DEFAULT_MARGIN, DEFAULT_MAX_CELLS
from ..utils.exceptions import PathError
from ..words import Word
from .loops import pride_loops
from .presentation import GroupPresentation
from .system import to_pride_system


def pride_pair(presentation: GroupPresentation, length_bound: int, with_3_cells: bool = False,
               margin: int = DEFAULT_MARGIN, max_cells: int = DEFAULT_MAX_CELLS,
               show_progress: bool = False) -> RelativePair:
    """
    (𝒟, 𝐪 ∪ 𝐭) of the presentation against (𝒟₁, 𝐪₁ ∪ 𝐭) of its subpresentation,
    both truncated at the same L
    """
    total = to_pride_system(presentation)
    sub = to_pride_system(presentation.subpresentation())
    X = build_truncated(total.system, length_bound, pride_loops(total), with_3_cells=with_3_cells,
                        max_cells=max_cells, margin=margin, show_progress=show_progress)
    Y = build_truncated(sub.system, length_bound, pride_loops(sub), with_3_cells=with_3_cells,
                        max_cells=max_cells, margin=margin, show_progress=show_progress)
    return RelativePair(X, Y)


def translate_cycle_right(cycle: Chain, u: Word) -> Chain:
    """ς.u"""
    return cycle.translate((), tuple(u))


def commutator_shadow(a: Path, b: Path) -> Tuple[Chain, Chain]:
    """
    For positive paths A = e₁…e_m and B = f₁…f_n:

    the difference chain(A.ιB ∘ τA.B) - chain(ιA.B ∘ A.τB), and the
    2-chain Σᵢⱼ [eᵢ, fⱼ] whose boundary equals it
    """
    if not a.is_positive or not b.is_positive:
        raise PathError("commutator shadow needs positive paths")
    first = a.translate((), b.initial).then(b.translate(a.terminal, ()))
    second = b.translate(a.initial, ()).then(a.translate((), b.terminal))
    difference = chain_of_path(first) - chain_of_path(second)
    squares = Chain(2)
    for e in a:
        for f in b:
            squares.add_term(square(e, f), 1)
    return difference, squares
