"""Small finite monoids and groups, built from an operation on a finite set"""

from itertools import combinations, permutations, product
from typing import Callable, List, Sequence

from ..utils.exceptions import MonoidTableError
from .monoid import FiniteMonoid, submonoid_closure


def table_from_operation(elements: Sequence, op: Callable) -> List[List[int]]:
    index = {x: i for i, x in enumerate(elements)}
    return [[index[op(x, y)] for y in elements] for x in elements]


def _compose(p, q):
    """p·q acts as q first, then p is applied to the result"""
    return tuple(p[q[i]] for i in range(len(q)))


def _cycle_notation(p) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = p[nxt]
        cycles.append('(' + ''.join(str(i + 1) for i in cycle) + ')')
    return ''.join(cycles) or 'e'


def _permutation_group(perms, name: str) -> FiniteMonoid:
    identity = tuple(range(len(perms[0])))
    perms = [identity] + sorted(p for p in set(perms) if p != identity)
    return FiniteMonoid(table_from_operation(perms, _compose),
                        [_cycle_notation(p) for p in perms], name=name)


def _even(p) -> bool:
    inversions = sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2 == 0


def cyclic_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise MonoidTableError("cyclic group order must be positive")
    elements = list(range(n))
    return FiniteMonoid(table_from_operation(elements, lambda a, b: (a + b) % n),
                        [f"a{i}" if i else 'e' for i in elements], name=f"C{n}")


def symmetric_group(n: int = 3) -> FiniteMonoid:
    return _permutation_group(list(permutations(range(n))), f"S{n}")


def alternating_group(n: int = 4) -> FiniteMonoid:
    return _permutation_group([p for p in permutations(range(n)) if _even(p)], f"A{n}")


def dihedral_group(n: int = 4) -> FiniteMonoid:
    """Symmetries of the n-gon, order 2n"""
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    generated = {tuple(range(n))}
    frontier = list(generated)
    while frontier:
        nxt = []
        for p in frontier:
            for g in (rotation, reflection):
                q = _compose(p, g)
                if q not in generated:
                    generated.add(q)
                    nxt.append(q)
        frontier = nxt
    return _permutation_group(list(generated), f"D{n}")


def full_transformation_monoid(n: int) -> FiniteMonoid:
    """All maps {0..n-1} -> itself under composition"""
    identity = tuple(range(n))
    maps = [identity] + [f for f in product(range(n), repeat=n) if f != identity]
    names = [''.join(str(i + 1) for i in f) for f in maps]
    return FiniteMonoid(table_from_operation(maps, _compose), names, name=f"T{n}")


def semilattice(n: int) -> FiniteMonoid:
    """The chain 0 < 1 < ... < n-1 under min, with n-1 the identity"""
    elements = list(range(n - 1, -1, -1))
    return FiniteMonoid(table_from_operation(elements, min), [str(x) for x in elements],
                        name=f"Chain{n}")


def subgroups(group: FiniteMonoid) -> List[frozenset]:
    """
    Subgroups generated by at most two elements, sorted by (order, members);
    every subgroup of a group of order <= 12 is among them
    """
    if not group.is_group():
        raise MonoidTableError(f"{group!r} is not a group")
    found = set()
    elements = range(group.size)
    for a in elements:
        for b in elements:
            if b < a:
                continue
            found.add(submonoid_closure(group, (a, b)))
    return sorted(found, key=lambda h: (len(h), sorted(h)))


CATALOG = {
    'C2': lambda: cyclic_group(2),
    'C3': lambda: cyclic_group(3),
    'C4': lambda: cyclic_group(4),
    'C6': lambda: cyclic_group(6),
    'S3': lambda: symmetric_group(3),
    'D4': lambda: dihedral_group(4),
    'A4': lambda: alternating_group(4),
    'T2': lambda: full_transformation_monoid(2),
    'T3': lambda: full_transformation_monoid(3),
    'Chain3': lambda: semilattice(3),
}


def catalog_monoid(name: str) -> FiniteMonoid:
    try:
        return CATALOG[name]()
    except KeyError:
        raise MonoidTableError(f"unknown catalog monoid {name!r}; known: {sorted(CATALOG)}") from None
