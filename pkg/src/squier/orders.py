"""The orders ≺₀, ≺₁, ≺₂ and canonical cell names"""

import weakref
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Tuple

from ..rewriting import Edge, RewritingSystem, is_complete
from ..utils.exceptions import ComplexError
from ..words import Alphabet, Ordering, Word
from .cells import Orientation, PCell, SquareCell, ThreeCell, two_cell_max_vertex


def compare_edges(e: Edge, f: Edge, alphabet: Alphabet) -> Ordering:
    """
    ≺₁ on positive edges with the same initial vertex.

    e ≺₁ f when (i) f's right part is a proper suffix of e's; or (ii) right
    parts agree and e's lhs is shorter; or (iii) right parts and lhs agree
    and e's rhs is llex-smaller. Different ι (or rules differing only in id)
    give INCOMPARABLE.
    """
    if e.sign < 0 or f.sign < 0:
        raise ComplexError("≺₁ compares positive edges")
    if e == f:
        return Ordering.EQUAL
    if e.initial != f.initial:
        return Ordering.INCOMPARABLE
    ve, vf = e.right, f.right
    if ve != vf:
        if len(vf) < len(ve) and ve[len(ve) - len(vf):] == vf:
            return Ordering.LESS
        if len(ve) < len(vf) and vf[len(vf) - len(ve):] == ve:
            return Ordering.GREATER
        return Ordering.INCOMPARABLE
    le, lf = e.rule.lhs, f.rule.lhs
    if len(le) != len(lf):
        return Ordering.LESS if len(le) < len(lf) else Ordering.GREATER
    if le == lf:
        order = alphabet.compare(e.rule.rhs, f.rule.rhs)
        return Ordering.INCOMPARABLE if order is Ordering.EQUAL else order
    return Ordering.INCOMPARABLE


@dataclass(frozen=True)
class CellName:
    """[w; (e₁, ..., e_k)] with e₁ ≺₁ ... ≺₁ e_k"""

    vertex: Word
    edges: Tuple[Edge, ...]

    def __str__(self):
        inner = ', '.join(str(e) for e in self.edges)
        return f"[{Alphabet.format(self.vertex)}; ({inner})]"


_COMPLETE_CACHE = weakref.WeakKeyDictionary()


def _require_complete(system: RewritingSystem):
    verdict = _COMPLETE_CACHE.get(system)
    if verdict is None:
        verdict = is_complete(system)
        _COMPLETE_CACHE[system] = verdict
    if not verdict:
        raise ComplexError("cell naming needs a complete llex-compatible system")


def _sorted_edges(edges, alphabet):
    def cmp(a, b):
        order = compare_edges(a, b, alphabet)
        if order is Ordering.INCOMPARABLE:
            raise ComplexError(f"edges {a} and {b} are ≺₁-incomparable")
        return order.value
    return tuple(sorted(edges, key=cmp_to_key(cmp)))


def _two_cell_edges(cell, alphabet):
    if isinstance(cell, SquareCell):
        e, f = cell.e, cell.f
        return cell.max_vertex, (e.translate((), f.initial), f.translate(e.initial, ()))
    if isinstance(cell, PCell):
        a, b = cell.loop.peak_edges(alphabet)
        return (cell.max_vertex(alphabet),
                (a.translate(cell.left, cell.right), b.translate(cell.left, cell.right)))
    raise ComplexError(f"not a 2-cell: {cell!r}")


def name_cell(cell, system: RewritingSystem, check: bool = True) -> CellName:
    """
    Canonical name of a 2-cell or 3-cell: its maximal vertex and the edges
    leaving it, sorted by ≺₁

    Args:
        cell: SquareCell, PCell or ThreeCell
        system: Complete system the cell belongs to
        check: Verify completeness (cached per system)
    """
    if check:
        _require_complete(system)
    alphabet = system.alphabet
    if isinstance(cell, ThreeCell):
        f = cell.edge
        w, (a, b) = _two_cell_edges(cell.cell, alphabet)
        if cell.orientation is Orientation.EDGE_FIRST:
            vertex = f.initial + w
            edges = (f.translate((), w), a.translate(f.initial, ()), b.translate(f.initial, ()))
        else:
            vertex = w + f.initial
            edges = (a.translate((), f.initial), b.translate((), f.initial), f.translate(w, ()))
        return CellName(vertex, _sorted_edges(edges, alphabet))
    vertex, edges = _two_cell_edges(cell, alphabet)
    return CellName(vertex, _sorted_edges(edges, alphabet))


def compare_names(x: CellName, y: CellName, alphabet: Alphabet) -> Ordering:
    """≺₂ on names [w;(e,f)]: by w, then f, then e"""
    order = alphabet.compare(x.vertex, y.vertex)
    if order is not Ordering.EQUAL:
        return order
    for i in range(len(x.edges) - 1, -1, -1):
        order = compare_edges(x.edges[i], y.edges[i], alphabet)
        if order is not Ordering.EQUAL:
            return order
    return Ordering.EQUAL


def compare_cells(c, d, system: RewritingSystem) -> Ordering:
    """≺₂ on 2-cells of a complete system"""
    return compare_names(name_cell(c, system), name_cell(d, system), system.alphabet)


def max_vertex(cell, alphabet: Alphabet) -> Word:
    if isinstance(cell, ThreeCell):
        return cell.max_vertex(alphabet)
    return two_cell_max_vertex(cell, alphabet)
