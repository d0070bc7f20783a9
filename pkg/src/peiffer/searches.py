"""
Bounded searches over Peiffer operations

Every search returns evidence (a replayable trace) or an inconclusive value.
The calculus argument is a PeifferCalculus.
"""

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..rewriting import NotFoundWithinBound, Unknown
from ..utils.exceptions import SequenceError
from ..utils.logger import setup_logger
from ..words import Word
from .steps import (
    EXTRACT,
    LEFT,
    RIGHT,
    PeifferStep,
    Trace,
    delete_step,
    exchange_step,
    extract_step,
    insert_step,
)
from .symbols import UpsilonWord, YSequence, is_u_generator, is_u_product


logger = setup_logger('PeifferSearch')

DEFAULT_MAX_STATES = 200_000


@dataclass(frozen=True)
class EquivalentWithTrace:
    trace: Trace


@dataclass(frozen=True)
class PrimaryPairing:
    """Index pairs (i, j): same relator, opposite signs, u_i = u_j modulo N"""

    pairs: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class NoPairing:
    reason: str


@dataclass(frozen=True)
class Reduced:
    """A trace of exchanges and deletions ending at the empty sequence"""

    trace: Trace


@dataclass(frozen=True)
class Failure:
    cause: object


@dataclass(frozen=True)
class InWeakDominionEvidence:
    """
    Exchanges and extractions from w to a product of 𝔘-generators; the
    extracted generators are central, so w equals `remainder` times them.
    """

    trace: Trace
    remainder: UpsilonWord
    extracted: Tuple[UpsilonWord, ...]


@dataclass(frozen=True)
class CentralityWitness:
    start: UpsilonWord
    end: UpsilonWord
    trace: Trace


# -- bidirectional search -----------------------------------------------------


def _neighbours(calculus, state: YSequence, pool, max_len: int):
    n = len(state)
    for i in range(n - 1):
        for direction in (LEFT, RIGHT):
            yield exchange_step(i, direction)
        if calculus.can_delete(state, i):
            yield delete_step(i)
    if n + 2 <= max_len:
        for i in range(n + 1):
            for symbol in pool:
                yield insert_step(i, symbol)


def _walk_back(parents, state) -> List[Tuple[YSequence, PeifferStep]]:
    """(predecessor, step) pairs from the root down to `state`"""
    out = []
    while parents[state] is not None:
        previous, step = parents[state]
        out.append((previous, step))
        state = previous
    out.reverse()
    return out


def _join(calculus, parents, meet) -> Trace:
    forward = [step for _, step in _walk_back(parents[0], meet)]
    backward = []
    state = meet
    while parents[1][state] is not None:
        previous, step = parents[1][state]
        backward.append(calculus.inverse_step(previous, step))
        state = previous
    return tuple(forward + backward)


def equivalent_bounded(calculus, s, t, max_steps: int = 8, max_len: int = 8,
                       max_states: int = DEFAULT_MAX_STATES):
    """
    Bidirectional breadth-first search for a Peiffer trace from s to t

    Insertions only use symbols occurring in s or t (and their inverses).

    Args:
        calculus: PeifferCalculus
        s, t: Y-sequences
        max_steps: Longest trace considered
        max_len: Longest intermediate sequence
        max_states: Cap on visited sequences

    Returns:
        EquivalentWithTrace or NotFoundWithinBound
    """
    s, t = calculus.validate(s), calculus.validate(t)
    if s == t:
        return EquivalentWithTrace(())
    pool = sorted({a for a in s + t} | {a.flip() for a in s + t}, key=str)
    parents: Tuple[Dict, Dict] = ({s: None}, {t: None})
    frontiers = ([s], [t])
    budgets = ((max_steps + 1) // 2, max_steps // 2)
    depths = [0, 0]
    explored = 0
    while True:
        options = [k for k in (0, 1) if frontiers[k] and depths[k] < budgets[k]]
        if not options:
            return NotFoundWithinBound(explored, exhausted=not (frontiers[0] and frontiers[1]))
        side = min(options, key=lambda k: len(frontiers[k]))
        mine, other = parents[side], parents[1 - side]
        next_level = []
        for state in frontiers[side]:
            for step in _neighbours(calculus, state, pool, max_len):
                new = calculus.apply(state, step)
                if new in mine:
                    continue
                mine[new] = (state, step)
                explored += 1
                if new in other:
                    trace = _join(calculus, parents, new)
                    logger.debug(f"Peiffer equivalence found after {explored} states")
                    return EquivalentWithTrace(trace)
                if explored >= max_states:
                    return NotFoundWithinBound(explored, exhausted=False)
                next_level.append(new)
        frontiers[side].clear()
        frontiers[side].extend(next_level)
        depths[side] += 1


# -- primary identity property --------------------------------------------------


def find_primary_pairing(calculus, s, oracle: Callable[[Word, Word], Optional[bool]]):
    """
    Group the indices of s into pairs (i, j) with r_i = r_j, ε_i = -ε_j and
    u_i = u_j modulo N, the latter decided by `oracle`

    Returns:
        PrimaryPairing, NoPairing, or Unknown when only inconclusive oracle
        answers stand between s and a pairing
    """
    s = calculus.validate(s)
    if not calculus.is_identity_sequence(s):
        return NoPairing("not an identity sequence")
    if len(s) % 2:
        return NoPairing("odd length")
    verdicts: Dict[Tuple[Word, Word], Optional[bool]] = {}
    inconclusive = False

    def congruent(u, v):
        key = (u, v) if u <= v else (v, u)
        if key not in verdicts:
            verdicts[key] = True if u == v else oracle(u, v)
        return verdicts[key]

    def search(remaining):
        nonlocal inconclusive
        if not remaining:
            return []
        i, rest = remaining[0], remaining[1:]
        for j in rest:
            a, b = s[i], s[j]
            if a.r != b.r or a.eps != -b.eps:
                continue
            verdict = congruent(a.u, b.u)
            if verdict is None:
                inconclusive = True
                continue
            if not verdict:
                continue
            found = search(tuple(k for k in rest if k != j))
            if found is not None:
                return [(i, j)] + found
        return None

    pairs = search(tuple(range(len(s))))
    if pairs is not None:
        return PrimaryPairing(tuple(pairs))
    if inconclusive:
        return Unknown("congruence oracle was inconclusive")
    return NoPairing("no pairing of the symbols exists")


# couples further apart than this are only carried straight across
MAX_TRANSPORT_CHOICES = 10


def _carry(calculus, s: YSequence, steps) -> YSequence:
    for step in steps:
        s = calculus.apply(s, step)
    return s


def _transports(i: int, j: int):
    """
    Exchange runs making s[i] and s[j] adjacent, with the index of the pair

    Depending on its direction, each crossing conjugates either the carried
    symbol or the neighbour it crosses.
    """
    d = j - i - 1
    if d <= MAX_TRANSPORT_CHOICES:
        choices = list(itertools.product((LEFT, RIGHT), repeat=d))
    else:
        choices = [(LEFT,) * d, (RIGHT,) * d]
    for choice in choices:
        yield tuple(exchange_step(k, c) for k, c in zip(range(j - 1, i, -1), choice)), i
    if d:
        for choice in choices:
            yield tuple(exchange_step(k, c) for k, c in zip(range(i, j - 1), choice)), j - 1


def _cancel_couple(calculus, s: YSequence, i: int, j: int) -> Optional[Trace]:
    """Exchanges bringing s[i] and s[j] together as a cancelling pair, then the deletion"""
    for steps, at in _transports(i, j):
        moved = _carry(calculus, s, steps)
        for finish in ((), (exchange_step(at, LEFT),), (exchange_step(at, RIGHT),)):
            if calculus.can_delete(_carry(calculus, moved, finish), at):
                return steps + finish + (delete_step(at),)
    return None


def _cancel_one(calculus, s: YSequence, pairing: PrimaryPairing) -> Optional[Trace]:
    """Cancel one couple; paired couples first, closest first"""
    paired = sorted(pairing.pairs, key=lambda p: (p[1] - p[0], p))
    for i, j in paired:
        steps = _cancel_couple(calculus, s, i, j)
        if steps is not None:
            return steps
    others = [(i, j) for i, j in itertools.combinations(range(len(s)), 2)
              if (i, j) not in pairing.pairs and s[i].r == s[j].r and s[i].eps == -s[j].eps]
    for i, j in sorted(others, key=lambda p: (p[1] - p[0], p)):
        steps = _cancel_couple(calculus, s, i, j)
        if steps is not None:
            return steps
    return None


def _weight(state: YSequence):
    return (len(state), sum(len(a.u) for a in state))


def _best_first(calculus, s: YSequence, max_steps: int, max_states: int):
    """Exchanges and deletions only, shortest sequences first"""
    counter = itertools.count()
    parents = {s: None}
    heap = [(_weight(s), 0, next(counter), s)]
    while heap:
        _, depth, _, state = heapq.heappop(heap)
        if not state:
            return tuple(step for _, step in _walk_back(parents, state))
        if depth >= max_steps:
            continue
        for step in _neighbours(calculus, state, (), 0):
            new = calculus.apply(state, step)
            if new in parents:
                continue
            parents[new] = (state, step)
            if len(parents) > max_states:
                return NotFoundWithinBound(len(parents), exhausted=False)
            heapq.heappush(heap, (_weight(new), depth + 1, next(counter), new))
    return NotFoundWithinBound(len(parents), exhausted=True)


def reduce_primary(calculus, s, oracle, max_steps: int = 64, max_states: int = 50_000):
    """
    Reduce a primary identity sequence to the empty sequence

    Each round takes the current primary pairing, carries a paired couple
    together with exchanges whose directions line the conjugators up, deletes
    it and pairs the remainder again. A couple that no exchange run aligns
    leaves the rest to a bounded best-first search over exchanges and
    deletions, with its own budget of `max_steps`.

    Returns:
        Reduced(trace) or Failure(NoPairing | Unknown | NotFoundWithinBound)
    """
    s = calculus.validate(s)
    pairing = find_primary_pairing(calculus, s, oracle)
    if not isinstance(pairing, PrimaryPairing):
        return Failure(pairing)
    trace: List[PeifferStep] = []
    current = s
    while current:
        steps = _cancel_one(calculus, current, pairing)
        if steps is None:
            break
        current = _carry(calculus, current, steps)
        trace.extend(steps)
        if not current:
            break
        pairing = find_primary_pairing(calculus, current, oracle)
        if not isinstance(pairing, PrimaryPairing):
            return Failure(pairing)
    if current:
        logger.info(f"No exchange run cancels a couple at length {len(current)}; searching")
        rest = _best_first(calculus, current, max_steps, max_states)
        if isinstance(rest, NotFoundWithinBound):
            return Failure(rest)
        trace.extend(rest)
    return Reduced(tuple(trace))


# -- words over Y ∪ Y⁻¹ -----------------------------------------------------


def _extract(w: UpsilonWord, i: int) -> UpsilonWord:
    return w[:i] + w[i + 2:]


def insertion_normal_probe(calculus, w: UpsilonWord, max_steps: int = 6,
                           max_states: int = 20_000):
    """
    Search for evidence that w lies in 𝔘

    Breadth-first over exchanges (both directions) and extraction of adjacent
    𝔘-generators, until the remaining word is a product of 𝔘-generators.

    Returns:
        InWeakDominionEvidence or Unknown
    """
    w = tuple(w)
    if calculus.theta_eval(w):
        return Unknown("not an identity sequence")
    parents = {w: None}
    queue = deque([(w, 0)])
    while queue:
        state, depth = queue.popleft()
        if is_u_product(state):
            path = _walk_back(parents, state)
            extracted = tuple(previous[step.index:step.index + 2]
                              for previous, step in path if step.kind == EXTRACT)
            return InWeakDominionEvidence(tuple(step for _, step in path), state, extracted)
        if depth >= max_steps:
            continue
        for i in range(len(state) - 1):
            moves = [exchange_step(i, LEFT), exchange_step(i, RIGHT)]
            if is_u_generator(state[i], state[i + 1]):
                moves.append(extract_step(i))
            for step in moves:
                if step.kind == EXTRACT:
                    new = _extract(state, i)
                else:
                    new = calculus.exchange(state, i, step.direction)
                if new in parents:
                    continue
                parents[new] = (state, step)
                if len(parents) > max_states:
                    return Unknown(f"state bound {max_states} reached")
                queue.append((new, depth + 1))
    return Unknown(f"no evidence within {max_steps} steps")


def centrality_witness(calculus, b, g: UpsilonWord) -> CentralityWitness:
    """
    g.b -> b.g for a 𝔘-generator g in two left exchanges

    Raises:
        SequenceError: g is not a 𝔘-generator
    """
    g = tuple(g)
    if len(g) != 2 or not is_u_generator(g[0], g[1]):
        raise SequenceError("centrality needs a generator σ(a)σ(a⁻¹)")
    start = g + (b,)
    trace = (exchange_step(1, LEFT), exchange_step(0, LEFT))
    end = start
    for step in trace:
        end = calculus.exchange(end, step.index, step.direction)
    if end != (b,) + g:
        raise SequenceError("exchanges did not commute the generator past the letter")
    return CentralityWitness(start, end, trace)
