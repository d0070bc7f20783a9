"""
Homological probes on truncations

A probe collects cycles supported inside the inner margin and asks whether
each one bounds. Truncated evidence is one-sided: a missing preimage is
reported, never turned into a negative verdict.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..homology import INCONCLUSIVE_CAVEAT, IntegerLattice, Witness, is_boundary, phi_matrix
from ..rewriting import CompletedSystemNormalForms, Edge, RewritingSystem
from ..utils.helpers import progress
from ..utils.logger import setup_logger
from .chains import Chain, cell_extent
from .complex import DEFAULT_MARGIN, DEFAULT_MAX_CELLS, TruncatedComplex, build_truncated
from .loops import resolution_loops


logger = setup_logger('Probe')

CONSISTENT = 'consistent'
INCONCLUSIVE = 'inconclusive'


@dataclass
class ProbeReport:
    """Outcome of a boundary probe at (L, margin)"""

    length_bound: int
    margin: int
    bounded: int = 0
    unbounded: List[str] = field(default_factory=list)
    census: Dict[str, int] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return INCONCLUSIVE if self.unbounded else CONSISTENT

    def to_dict(self, include_cycles: bool = False) -> Dict:
        report = {
            'bounded': self.bounded,
            'unbounded_in_truncation': len(self.unbounded),
            'verdict': self.verdict,
            'caveat': INCONCLUSIVE_CAVEAT if self.unbounded else None,
            'length_bound': self.length_bound,
            'margin': self.margin,
            'census': dict(self.census),
        }
        if include_cycles:
            report['cycles'] = list(self.unbounded)
        return report


def fundamental_cycles(X: TruncatedComplex, bound: Optional[int] = None) -> List[Chain]:
    """
    Cycle basis of the 1-skeleton restricted to vertices of length <= bound
    (default: the inner bound), one cycle per non-tree edge of a BFS forest
    """
    if bound is None:
        bound = X.inner_bound
    edges = [e for e in X.cells(1) if len(e.initial) <= bound and len(e.terminal) <= bound]
    adjacent: Dict[tuple, List[Edge]] = {}
    for e in edges:
        adjacent.setdefault(e.initial, []).append(e)
        adjacent.setdefault(e.terminal, []).append(e)

    # parent[v] = (edge, sign) leading from v towards its root
    parent: Dict[tuple, Optional[tuple]] = {}
    tree = set()
    for root in X.cells(0):
        if len(root) > bound or root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in adjacent.get(v, ()):
                w = e.terminal if e.initial == v else e.initial
                if w in parent:
                    continue
                # from w back to v: e itself when w = τe, e⁻¹ otherwise
                parent[w] = (e, -1 if w == e.terminal else 1)
                tree.add(e)
                queue.append(w)

    def to_root(v) -> Chain:
        out = Chain(1)
        while parent[v] is not None:
            e, sign = parent[v]
            out.add_term(e, sign)
            v = e.terminal if sign > 0 else e.initial
        return out

    cycles = []
    for e in edges:
        if e in tree:
            continue
        z = Chain.of(1, e) + to_root(e.terminal) - to_root(e.initial)
        if z:
            cycles.append(z)
    return cycles


def probe_cycles(X: TruncatedComplex, cycles: Sequence[Chain], show_progress: bool = False,
                 max_cycles: Optional[int] = None) -> ProbeReport:
    """Run is_boundary on each cycle and tally the outcomes"""
    report = ProbeReport(X.length_bound, X.margin, census=X.census())
    if max_cycles is not None:
        cycles = list(cycles)[:max_cycles]
    for z in progress(cycles, show_progress, desc='cycles', total=len(cycles)):
        verdict = is_boundary(z, X)
        if isinstance(verdict, Witness):
            report.bounded += 1
        else:
            report.unbounded.append(repr(z))
    logger.info(f"Probe at L={X.length_bound}, m={X.margin}: {report.bounded} bounded, "
                f"{len(report.unbounded)} unbounded")
    return report


def trivializer_probe(system: RewritingSystem, length_bound: int, margin: int = DEFAULT_MARGIN,
                      max_cells: int = DEFAULT_MAX_CELLS, show_progress: bool = False) -> ProbeReport:
    """
    Every inner 1-cycle of (𝒟, 𝐩) with 𝐩 the resolution loops should bound

    Args:
        system: Complete rewriting system
        length_bound: L
        margin: Inner margin m
    """
    loops = resolution_loops(system)
    X = build_truncated(system, length_bound, loops, max_cells=max_cells, margin=margin,
                        show_progress=show_progress)
    return probe_cycles(X, fundamental_cycles(X), show_progress)


def inner_kp_cycles(X: TruncatedComplex, provider) -> List[Chain]:
    """ℤ-basis of Ker ∂̃₂ ∩ Ker φ among 2-chains on inner cells"""
    cells = X.cells(2)
    inner = [j for j, c in enumerate(cells) if cell_extent(c) <= X.inner_bound]
    d2 = X.boundary_matrix(2)
    phi, _ = phi_matrix([cells[j] for j in inner], provider)
    offset = d2.n_rows
    lattice = IntegerLattice()
    for pos, j in enumerate(inner):
        column = dict(d2.column(j))
        for row, v in phi.column(pos).items():
            column[offset + row] = v
        lattice.add(column, j)
    return [X.chain_from_vector(2, rel) for rel in lattice.kernel_basis()]


def kp_exactness_probe(system: RewritingSystem, length_bound: int, margin: int = DEFAULT_MARGIN,
                       provider=None, max_cells: int = DEFAULT_MAX_CELLS,
                       show_progress: bool = False) -> ProbeReport:
    """
    Each inner 2-cycle lying in K^𝐩 should be a boundary of 3-cells

    Args:
        system: Complete rewriting system
        length_bound: L
        margin: Inner margin m
        provider: Normal forms for φ (defaults to the system's own)
    """
    if provider is None:
        provider = CompletedSystemNormalForms(system)
    loops = resolution_loops(system)
    X = build_truncated(system, length_bound, loops, with_3_cells=True, max_cells=max_cells,
                        margin=margin, show_progress=show_progress)
    return probe_cycles(X, inner_kp_cycles(X, provider), show_progress)
