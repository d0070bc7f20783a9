"""Each 𝐪 and 𝐭 loop comes from the resolution of a critical pair"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..rewriting import Edge, critical_pairs
from ..utils.exceptions import PresentationError
from ..utils.logger import setup_logger
from ..words import Alphabet, Word
from .loops import q_loops, t_loops
from .presentation import GroupPresentation
from .system import to_pride_system


logger = setup_logger('RemarkAudit')


@dataclass(frozen=True)
class AuditEntry:
    """The overlap behind one loop and whether critical_pairs reports it"""

    loop_id: str
    overlap_word: Word
    edge_a: Edge
    edge_b: Edge
    found: bool

    def to_dict(self) -> Dict:
        return {
            'loop': self.loop_id,
            'overlap': Alphabet.format(self.overlap_word),
            'edges': [str(self.edge_a), str(self.edge_b)],
            'found': self.found,
        }


def strip_context(a: Edge, b: Edge) -> Tuple[Edge, Edge]:
    """Remove the left and right context both edges share"""
    k = 0
    while k < min(len(a.left), len(b.left)) and a.left[k] == b.left[k]:
        k += 1
    m = 0
    while m < min(len(a.right), len(b.right)) and a.right[-1 - m] == b.right[-1 - m]:
        m += 1

    def cut(e: Edge) -> Edge:
        return Edge(e.left[k:], e.rule, e.sign, e.right[:len(e.right) - m])

    return cut(a), cut(b)


def remark_ir_audit(presentation: GroupPresentation) -> List[AuditEntry]:
    """
    For every loop of 𝐪 ∪ 𝐭, the overlapping edge pair at its peak, reduced
    to the overlap word and matched against the system's critical pairs

    Raises:
        PresentationError: a relator is empty
    """
    for label, word in presentation.relators:
        if not word:
            raise PresentationError(f"relator {label!r} is empty")
    pride = to_pride_system(presentation)
    reported = {cp.unordered() for cp in critical_pairs(pride.system)}
    entries = []
    for loop in q_loops(pride) + t_loops(pride):
        a, b = strip_context(*loop.critical_pair)
        found = frozenset((a, b)) in reported
        entries.append(AuditEntry(loop.id, a.initial, a, b, found))
        if not found:
            logger.warning(f"loop {loop.id}: overlap at {Alphabet.format(a.initial)} not among critical pairs")
    logger.info(f"Audited {len(entries)} loops, {sum(e.found for e in entries)} matched")
    return entries
