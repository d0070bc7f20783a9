"""Asphericity probe: do the inner 1-cycles of (𝒟, 𝐪 ∪ 𝐭) bound?"""

from ..squier import build_truncated, fundamental_cycles, probe_cycles, ProbeReport
from ..squier.complex import DEFAULT_MARGIN, DEFAULT_MAX_CELLS
from ..utils.logger import setup_logger
from .loops import pride_loops
from .presentation import GroupPresentation
from .system import to_pride_system


logger = setup_logger('AsphericalProbe')


def pride_truncation(presentation: GroupPresentation, length_bound: int, margin: int = DEFAULT_MARGIN,
                     with_3_cells: bool = False, max_cells: int = DEFAULT_MAX_CELLS,
                     show_progress: bool = False):
    """Truncation at L of the Pride complex with the 𝐪 ∪ 𝐭 cells attached"""
    pride = to_pride_system(presentation)
    return build_truncated(pride.system, length_bound, pride_loops(pride), with_3_cells=with_3_cells,
                           max_cells=max_cells, margin=margin, show_progress=show_progress)


def aspherical_probe(presentation: GroupPresentation, length_bound: int, margin: int = DEFAULT_MARGIN,
                     max_cells: int = DEFAULT_MAX_CELLS, show_progress: bool = False,
                     max_cycles=None) -> ProbeReport:
    """
    Probe H₁(𝒟, 𝐪 ∪ 𝐭) = 0 at desk scale

    A cycle basis of the 1-skeleton on words of length <= L - margin is
    tested for boundaries in the truncation at L. An unbounded cycle only
    makes the verdict inconclusive.

    Args:
        presentation: Group presentation
        length_bound: L; 0 gives a vacuous report
        margin: Inner margin m
        max_cells: Resource cap for the build
        show_progress: tqdm bars on stderr
        max_cycles: Optional cap on the number of cycles tested

    Returns:
        ProbeReport
    """
    if length_bound == 0:
        logger.info("L = 0: nothing to probe")
        return ProbeReport(0, margin)
    X = pride_truncation(presentation, length_bound, margin, max_cells=max_cells,
                         show_progress=show_progress)
    cycles = fundamental_cycles(X)
    logger.info(f"{presentation!r}: {len(cycles)} inner cycles at L={length_bound}, m={margin}")
    return probe_cycles(X, cycles, show_progress, max_cycles)
