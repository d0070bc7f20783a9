"""Finite monoids given by multiplication tables"""

from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..utils.exceptions import MonoidTableError
from ..utils.logger import setup_logger


logger = setup_logger('FiniteMonoid')


class FiniteMonoid:
    """
    Elements 0..n-1 with table[i, j] = i·j.

    Associativity and the identity law are checked in full at construction.
    """

    def __init__(self, table, names: Optional[Sequence[str]] = None, name: Optional[str] = None):
        """
        Args:
            table: n x n integer table (nested lists or array)
            names: Optional element names; defaults to '0', '1', ...
            name: Optional label used in logs and reports

        Raises:
            MonoidTableError: not square, entries out of range, not
                associative, or no identity
        """
        try:
            table = np.asarray(table, dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise MonoidTableError(f"table is not an integer matrix: {exc}") from None
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise MonoidTableError(f"table must be a nonempty square matrix, got shape {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise MonoidTableError(f"table entries must lie in 0..{n - 1}")
        self.table = table
        self.size = n
        self.name = name
        self.names: List[str] = [str(x) for x in (names if names is not None else range(n))]
        if len(self.names) != n or len(set(self.names)) != n:
            raise MonoidTableError("element names must be distinct, one per row")
        self._index = {x: i for i, x in enumerate(self.names)}

        bad = self.associativity_violation()
        if bad is not None:
            a, b, c = bad
            raise MonoidTableError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        identity = self.find_identity()
        if identity is None:
            raise MonoidTableError("table has no identity element")
        self.identity = identity

    @classmethod
    def from_csv(cls, path: Union[str, Path], name: Optional[str] = None) -> 'FiniteMonoid':
        """
        Read a table: header row of element names, row i column j the index of i·j

        Raises:
            MonoidTableError: unreadable or malformed file
        """
        try:
            frame = pd.read_csv(path, dtype=str, skipinitialspace=True)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
            raise MonoidTableError(f"cannot read table {path}: {exc}") from None
        names = [str(c).strip() for c in frame.columns]
        try:
            table = frame.apply(lambda col: col.str.strip().astype(int)).to_numpy()
        except ValueError as exc:
            raise MonoidTableError(f"non-integer entry in {path}: {exc}") from None
        monoid = cls(table, names, name=name or Path(path).stem)
        logger.info(f"Loaded monoid {monoid.name} of order {monoid.size} from {path}")
        return monoid

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.table, columns=self.names)

    def to_csv(self, path: Union[str, Path]):
        self.to_frame().to_csv(path, index=False)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteMonoid({self.name or ''} order={self.size})"

    def associativity_violation(self):
        """Some (a, b, c) with (ab)c != a(bc), or None"""
        T = self.table
        n = self.size
        left = T[T, :]                                        # [a, b, c] -> (ab)c
        right = T[np.arange(n)[:, None, None], T[None, :, :]]  # [a, b, c] -> a(bc)
        diff = np.argwhere(left != right)
        if len(diff):
            return tuple(int(x) for x in diff[0])
        return None

    def find_identity(self) -> Optional[int]:
        n = self.size
        row = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e, :], row) and np.array_equal(self.table[:, e], row):
                return e
        return None

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def evaluate(self, elements: Iterable[int]) -> int:
        out = self.identity
        for x in elements:
            out = int(self.table[out, x])
        return out

    def element(self, key: Union[int, str]) -> int:
        """Index of an element given by index or name"""
        if isinstance(key, (int, np.integer)):
            if not 0 <= key < self.size:
                raise MonoidTableError(f"element index {key} out of range")
            return int(key)
        key = str(key).strip()
        if key in self._index:
            return self._index[key]
        if key.isdigit() and int(key) < self.size:
            return int(key)
        raise MonoidTableError(f"unknown element {key!r}")

    def inverse(self, a: int) -> Optional[int]:
        for b in range(self.size):
            if self.table[a, b] == self.identity and self.table[b, a] == self.identity:
                return b
        return None

    def is_group(self) -> bool:
        return all(self.inverse(a) is not None for a in range(self.size))

    def is_submonoid(self, elements: Iterable[int]) -> bool:
        subset = set(elements)
        if self.identity not in subset:
            return False
        return all(int(self.table[a, b]) in subset for a in subset for b in subset)

    def submonoid(self, elements: Iterable[Union[int, str]]) -> frozenset:
        """
        Validated submonoid as a frozenset of indices

        Raises:
            MonoidTableError: missing identity or not closed
        """
        subset = frozenset(self.element(x) for x in elements)
        if self.identity not in subset:
            raise MonoidTableError("submonoid must contain the identity")
        for a in subset:
            for b in subset:
                if int(self.table[a, b]) not in subset:
                    raise MonoidTableError(f"not closed: {self.names[a]}*{self.names[b]} "
                                           f"= {self.names[self.table[a, b]]}")
        return subset


def submonoid_closure(monoid: FiniteMonoid, generators: Iterable[Union[int, str]]) -> frozenset:
    """Smallest submonoid containing the generators"""
    gens = [monoid.element(g) for g in generators]
    found = {monoid.identity}
    frontier = [monoid.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = monoid.multiply(a, g)
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(found)
