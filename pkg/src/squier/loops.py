"""Resolution loops of a complete system"""

from typing import List

from ..rewriting import Path, Resolvable, RewritingSystem, critical_pairs, is_resolvable
from ..rewriting.reduction import DEFAULT_STEP_LIMIT
from ..utils.exceptions import RuleError
from ..utils.logger import setup_logger
from .cells import LoopDef


logger = setup_logger('ResolutionLoops')


def resolution_loops(system: RewritingSystem, step_limit: int = DEFAULT_STEP_LIMIT,
                     prefix: str = 'c') -> List[LoopDef]:
    """
    One loop e₁ ∘ p₁ ∘ p₂⁻¹ ∘ e₂⁻¹ per critical pair (e₁, e₂), where pᵢ is
    the leftmost normalizing path from τeᵢ

    Args:
        system: Complete rewriting system
        step_limit: Normalization step cap
        prefix: Loop ids are prefix1, prefix2, ...

    Returns:
        List of LoopDef, in critical pair order

    Raises:
        RuleError: some critical pair does not resolve
    """
    loops = []
    for n, cp in enumerate(critical_pairs(system), 1):
        verdict = is_resolvable(cp, system, step_limit)
        if not isinstance(verdict, Resolvable):
            raise RuleError(f"critical pair at {system.alphabet.format(cp.overlap_word)} "
                            f"does not resolve: {verdict}")
        path = (Path.of([cp.edge_a])
                .then(verdict.path_a)
                .then(verdict.path_b.inverse())
                .then(Path.of([cp.edge_b.inverse()])))
        loops.append(LoopDef(f"{prefix}{n}", 'resolution', path,
                             critical_pair=(cp.edge_a, cp.edge_b), params=(cp.kind.value,)))
    logger.info(f"{len(loops)} resolution loops for {system.name or 'system'}")
    return loops
