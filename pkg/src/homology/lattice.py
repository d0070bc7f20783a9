"""
Sparse integer lattices in echelon form

Vectors are dicts {coordinate: int}. Every basis vector remembers the
integer combination of inserted generators it came from, so membership
answers come with a witness and generators that reduce to zero give a
ℤ-basis of the relation (kernel) lattice.
"""

from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple


Vector = Dict[int, int]
Combination = Dict[Hashable, int]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """x, y, g with x*a + y*b == g == gcd(a, b) (g may be negative)"""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def axpy(target: Dict, scale: int, source: Mapping) -> Dict:
    """target += scale * source, dropping zeros; returns target"""
    if not scale:
        return target
    for k, v in source.items():
        s = target.get(k, 0) + scale * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def combine(a: int, u: Mapping, b: int, v: Mapping) -> Dict:
    """a*u + b*v"""
    out = {k: a * x for k, x in u.items()} if a else {}
    out = {k: x for k, x in out.items() if x}
    return axpy(out, b, v)


def pivot_of(vec: Mapping[int, int]) -> Optional[int]:
    return min(vec) if vec else None


class IntegerLattice:
    """
    Subgroup of ℤ^N spanned by inserted vectors, kept in echelon form

    The basis has at most one vector per pivot (its smallest coordinate),
    with a positive pivot entry.
    """

    __slots__ = ('rows', 'relations', 'generators')

    def __init__(self):
        # pivot -> (vector, combination)
        self.rows: Dict[int, Tuple[Vector, Combination]] = {}
        self.relations: List[Combination] = []
        self.generators = 0

    @classmethod
    def from_columns(cls, columns: Iterable[Mapping[int, int]]) -> 'IntegerLattice':
        """Lattice spanned by matrix columns; generator j is tagged j"""
        lattice = cls()
        for j, col in enumerate(columns):
            lattice.add(col, j)
        return lattice

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vector]:
        return [self.rows[p][0] for p in self.pivots()]

    def add(self, vec: Mapping[int, int], tag: Hashable = None) -> Optional[Combination]:
        """
        Insert a generator

        Args:
            vec: Sparse integer vector
            tag: Name of this generator in combinations (defaults to its insertion number)

        Returns:
            The relation (combination summing to zero) when vec is dependent, else None
        """
        if tag is None:
            tag = self.generators
        self.generators += 1
        v = {k: int(x) for k, x in vec.items() if x}
        c: Combination = {tag: 1}
        while v:
            p = pivot_of(v)
            if p not in self.rows:
                if v[p] < 0:
                    v = {k: -x for k, x in v.items()}
                    c = {k: -x for k, x in c.items()}
                self.rows[p] = (v, c)
                return None
            row, rc = self.rows[p]
            a, b = row[p], v[p]
            if b % a == 0:
                q = b // a
                axpy(v, -q, row)
                axpy(c, -q, rc)
                continue
            x, y, g = xgcd(a, b)
            if g < 0:
                x, y, g = -x, -y, -g
            new_row = combine(x, row, y, v)
            new_rc = combine(x, rc, y, c)
            v = combine(-b // g, row, a // g, v)
            c = combine(-b // g, rc, a // g, c)
            self.rows[p] = (new_row, new_rc)
        if c:
            self.relations.append(c)
        return c

    def solve(self, target: Mapping[int, int]) -> Optional[Combination]:
        """
        Combination of generators summing to target, or None when target is
        not in the lattice
        """
        v = {k: int(x) for k, x in target.items() if x}
        out: Combination = {}
        while v:
            p = pivot_of(v)
            if p not in self.rows:
                return None
            row, rc = self.rows[p]
            q, r = divmod(v[p], row[p])
            if r:
                return None
            axpy(v, -q, row)
            axpy(out, q, rc)
        return out

    def __contains__(self, target) -> bool:
        return self.solve(target) is not None

    def kernel_basis(self) -> List[Combination]:
        """ℤ-basis of the relations among the generators inserted so far"""
        return list(self.relations)

    def invariant_factors(self) -> List[int]:
        """
        Invariant factors of the lattice inside ℤ^N (nonzero diagonal of its
        Smith form); factors equal to 1 are included
        """
        from .smith import invariant_factors

        units = {p for p, (row, _) in self.rows.items() if row[p] == 1}
        rest = []
        for p in self.pivots():
            if p in units:
                continue
            v = dict(self.rows[p][0])
            # clear coordinates owned by unit pivots; the unit rows carry them
            changed = True
            while changed:
                changed = False
                for k in sorted(v):
                    if k in units and k in v:
                        axpy(v, -v[k], self.rows[k][0])
                        changed = True
                        break
            rest.append(v)
        factors = [1] * len(units)
        if rest:
            support = sorted({k for v in rest for k in v})
            where = {k: i for i, k in enumerate(support)}
            dense = [[0] * len(support) for _ in rest]
            for i, v in enumerate(rest):
                for k, x in v.items():
                    dense[i][where[k]] = x
            factors.extend(invariant_factors(dense))
        return sorted(factors)

    def __repr__(self):
        return f"IntegerLattice(rank={self.rank}, relations={len(self.relations)})"
