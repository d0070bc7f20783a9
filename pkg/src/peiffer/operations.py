"""Module-level forms of the calculus, each taking the group presentation last"""

from ..pride.presentation import GroupPresentation
from .calculus import PeifferCalculus


def theta_eval(s, presentation: GroupPresentation):
    return PeifferCalculus(presentation).theta_eval(s)


def is_identity_sequence(s, presentation: GroupPresentation) -> bool:
    return PeifferCalculus(presentation).is_identity_sequence(s)


def peiffer_exchange(s, i: int, direction: str, presentation: GroupPresentation):
    return PeifferCalculus(presentation).exchange(s, i, direction)


def peiffer_delete(s, i: int, presentation: GroupPresentation):
    return PeifferCalculus(presentation).delete(s, i)


def peiffer_insert(s, i: int, symbol, presentation: GroupPresentation):
    return PeifferCalculus(presentation).insert(s, i, symbol)


def replay(s, trace, presentation: GroupPresentation):
    return PeifferCalculus(presentation).replay(s, trace)


def include_subpresentation(s, sub: GroupPresentation, presentation: GroupPresentation):
    """Y-sequence over 𝐫₁ as a Y-sequence over 𝐫"""
    return PeifferCalculus(presentation).include(s, sub)
