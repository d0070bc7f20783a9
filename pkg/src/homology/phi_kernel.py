"""The map φ : C₂ ⊕ C₂^𝐩 -> ℤS.𝐩̂.ℤS and membership in K^𝐩 = Ker φ"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..rewriting import Unknown
from .matrix import BoundaryMatrix


@dataclass(frozen=True)
class InKp:
    pass


@dataclass(frozen=True)
class NotInKp:
    """φ(ξ) != 0; residue maps (loop, ū, v̄) to its nonzero coefficient"""

    residue: Tuple[Tuple[Tuple[str, Tuple, Tuple], int], ...]


def _phi_key(cell, provider):
    loop = getattr(cell, 'loop', None)
    if loop is None:
        return None
    u = provider.normal_form(cell.left)
    v = provider.normal_form(cell.right)
    if u is None or v is None:
        raise LookupError(f"no normal form for the context of {cell}")
    return (loop.id, u, v)


def phi_image(xi, provider) -> Dict[Tuple, int]:
    """
    φ(ξ) as {(loop id, ū, v̄): coefficient}; square cells map to 0

    Raises:
        LookupError: the provider has no normal form for some context word
    """
    out: Dict[Tuple, int] = {}
    for cell, coef in xi.items():
        key = _phi_key(cell, provider)
        if key is None:
            continue
        s = out.get(key, 0) + coef
        if s:
            out[key] = s
        else:
            del out[key]
    return out


def phi_kernel_membership(xi, provider):
    """
    InKp when every (loop, ū, v̄) group of p-cell coefficients sums to zero

    Returns:
        InKp, NotInKp(residue) or Unknown when normal forms are unavailable
    """
    try:
        image = phi_image(xi, provider)
    except LookupError as exc:
        return Unknown(str(exc))
    if not image:
        return InKp()
    return NotInKp(tuple(sorted(image.items(), key=repr)))


def phi_matrix(cells: List, provider) -> Tuple[BoundaryMatrix, List[Tuple]]:
    """
    φ in coordinates: one column per 2-cell, one row per (loop, ū, v̄) class

    Returns:
        (matrix, row labels)
    """
    rows: Dict[Tuple, int] = {}
    columns = []
    for cell in cells:
        key = _phi_key(cell, provider)
        if key is None:
            columns.append({})
            continue
        columns.append({rows.setdefault(key, len(rows)): 1})
    return BoundaryMatrix(len(rows), columns), list(rows)
