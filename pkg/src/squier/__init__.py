"""
Squier Module
Derivation graph cells, boundary maps, cell orders and truncated complexes
"""

from ..rewriting.edges import Edge, Path, endpoints, compose
from .chains import Chain, chain_of_path, chain_sum, translate_cell, cell_extent
from .cells import (
    LoopDef,
    SquareCell,
    PCell,
    ThreeCell,
    Orientation,
    square,
    edge_first,
    cell_first,
    loop_peak_edges,
)
from .boundaries import boundary, boundary1, boundary2, boundary3, three_cell_faces, boundary_of_chain
from .orders import CellName, compare_edges, compare_cells, compare_names, name_cell
from .complex import TruncatedComplex, ComplexBuilder, build_truncated
from .loops import resolution_loops
from .retraction import find_replacement_path, retract_edge_chain, thue_edges
from .probes import (
    ProbeReport,
    fundamental_cycles,
    probe_cycles,
    trivializer_probe,
    inner_kp_cycles,
    kp_exactness_probe,
)

__all__ = [
    'Edge', 'Path', 'endpoints', 'compose',
    'Chain', 'chain_of_path', 'chain_sum', 'translate_cell', 'cell_extent',
    'LoopDef', 'SquareCell', 'PCell', 'ThreeCell', 'Orientation', 'square', 'edge_first',
    'cell_first', 'loop_peak_edges',
    'boundary', 'boundary1', 'boundary2', 'boundary3', 'three_cell_faces', 'boundary_of_chain',
    'CellName', 'compare_edges', 'compare_cells', 'compare_names', 'name_cell',
    'TruncatedComplex', 'ComplexBuilder', 'build_truncated',
    'resolution_loops',
    'find_replacement_path', 'retract_edge_chain', 'thue_edges',
    'ProbeReport', 'fundamental_cycles', 'probe_cycles', 'trivializer_probe',
    'inner_kp_cycles', 'kp_exactness_probe',
]
