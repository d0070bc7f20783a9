"""
Universal groups of presented monoids and the weak dominion probe

𝒢(S) for S = ⟨A : R⟩ is the group ⟨A : u·ι(v), (u, v) ∈ R⟩. Whether d lies in
the weak dominion of U = ⟨U_generators⟩ comes down to whether the image of d
lies in the subgroup of 𝒢(S) generated by the images of U.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..pride.presentation import GroupPresentation
from ..pride.system import PrideSystem
from ..rewriting import CompletedSystemNormalForms, RewritingSystem, Unknown, knuth_bendix
from ..utils.logger import setup_logger
from ..words import Alphabet, Word


logger = setup_logger('UniversalGroup')


@dataclass(frozen=True)
class InWDomEvidence:
    """d equals the product of U-generator images listed as (index, ±1)"""
    witness: Tuple[Tuple[int, int], ...]

    def to_dict(self):
        return {'result': 'in_wdom', 'witness': [list(x) for x in self.witness]}


@dataclass(frozen=True)
class NotInWDom:
    """The subgroup was enumerated in full and does not contain d"""
    subgroup_order: int
    elements: Tuple[Word, ...] = field(default=(), repr=False)

    def to_dict(self):
        return {'result': 'not_in_wdom', 'subgroup_order': self.subgroup_order}


def _generator_map(alphabet: Alphabet) -> Tuple[List[str], Dict[str, Tuple[str, int]]]:
    """Group generators for a monoid alphabet, and letter -> (generator, sign)"""
    generators: List[str] = []
    images: Dict[str, Tuple[str, int]] = {}
    pairing = alphabet.pairing()
    for x in alphabet.letters:
        if x in images:
            continue
        generators.append(x)
        images[x] = (x, 1)
        if pairing is not None:
            images[pairing[x]] = (x, -1)
    return generators, images


class UniversalGroup:
    """The presentation of 𝒢(S) together with the letter map A -> 𝐱 ∪ 𝐱⁻¹"""

    def __init__(self, system: RewritingSystem, name: Optional[str] = None):
        self.source = system
        generators, self._images = _generator_map(system.alphabet)
        group_alphabet = Alphabet.free_group(generators)
        self._group_alphabet = group_alphabet

        relators = []
        seen = set()
        for rule in system:
            iota_v = group_alphabet.formal_inverse(self.image(rule.rhs))
            word = group_alphabet.free_reduce(self.image(rule.lhs) + iota_v)
            if not word or word in seen or group_alphabet.formal_inverse(word) in seen:
                continue
            seen.add(word)
            relators.append((rule.id, word))
        self.presentation = GroupPresentation(generators, relators,
                                              name=name or f"G({system.name or 'S'})")
        logger.info(f"Universal group {self.presentation!r}")

    def image(self, w: Word) -> Word:
        """The word over 𝐱 ∪ 𝐱⁻¹ representing the image of w"""
        out = []
        for x in self.source.alphabet.validate(w):
            gen, sign = self._images[x]
            out.append(gen if sign > 0 else self._group_alphabet.inverse_letter(gen))
        return tuple(out)


def universal_group_presentation(system: RewritingSystem) -> GroupPresentation:
    """
    𝒢(S) as a group presentation

    Relators are the free reductions of u·ι(v) for every rule u -> v; empty
    ones and repeats (up to inversion) are dropped. A letter paired with an
    earlier letter in the alphabet is sent to that letter's inverse.
    """
    return UniversalGroup(system).presentation


def weak_dominion_probe(system: RewritingSystem, u_generators: Sequence[Word], d: Word,
                        max_rules: int = 200, max_lhs_len: int = 12, subgroup_bound: int = 12,
                        max_elements: int = 10000):
    """
    Search for d in the subgroup of 𝒢(S) generated by the images of U

    Args:
        system: Presentation of S
        u_generators: Words generating U
        d: Word representing the element tested
        max_rules: Knuth-Bendix rule cap for 𝒢(S)
        max_lhs_len: Knuth-Bendix lhs length cap
        subgroup_bound: Longest product of generator images explored
        max_elements: Subgroup elements kept before giving up

    Returns:
        InWDomEvidence, NotInWDom (only after the subgroup closed up within the
        bounds), or Unknown
    """
    group = UniversalGroup(system)
    pride = PrideSystem(group.presentation)
    completion = knuth_bendix(pride.system, max_rules=max_rules, max_lhs_len=max_lhs_len)
    if not completion.is_complete:
        reason = completion.reason or completion.status.value
        return Unknown(f"completion of {group.presentation!r} stopped: {reason}")
    normal_forms = CompletedSystemNormalForms(completion.system)
    alphabet = group.presentation.alphabet

    steps = []
    for i, g in enumerate(u_generators):
        image = group.image(g)
        steps.append(((i, 1), image))
        steps.append(((i, -1), alphabet.formal_inverse(image)))

    target = normal_forms.normal_form(group.image(d))
    identity = normal_forms.normal_form(())
    if target is None or identity is None:
        return Unknown("normalization in the universal group did not terminate")

    parents: Dict[Word, Optional[Tuple[Word, Tuple[int, int]]]] = {identity: None}
    frontier = [identity]
    depth = 0
    while True:
        if target in parents:
            witness = []
            node = target
            while parents[node] is not None:
                node, step = parents[node]
                witness.append(step)
            return InWDomEvidence(tuple(reversed(witness)))
        if not frontier:
            logger.info(f"Subgroup closed at order {len(parents)} without reaching d")
            return NotInWDom(len(parents), tuple(sorted(parents, key=alphabet.sort_key)))
        if depth >= subgroup_bound:
            return Unknown(f"subgroup not closed after products of length {subgroup_bound}")
        if len(parents) > max_elements:
            return Unknown(f"subgroup exceeds {max_elements} elements")
        depth += 1
        nxt = []
        for h in frontier:
            for step, image in steps:
                g = normal_forms.normal_form(h + image)
                if g is None:
                    return Unknown("normalization in the universal group did not terminate")
                if g not in parents:
                    parents[g] = (h, step)
                    nxt.append(g)
        frontier = nxt
