"""Sparse integer boundary matrices"""

from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np


class BoundaryMatrix:
    """
    Column-sparse integer matrix: rows are (k-1)-cells, columns k-cells

    Entries are Python ints, so arithmetic stays exact.
    """

    def __init__(self, n_rows: int, columns: Iterable[Mapping[int, int]]):
        """
        Args:
            n_rows: Number of (k-1)-cells
            columns: One {row: coefficient} map per k-cell
        """
        self.n_rows = n_rows
        self.columns: List[Dict[int, int]] = []
        for j, col in enumerate(columns):
            clean = {}
            for i, v in col.items():
                if not 0 <= i < n_rows:
                    raise IndexError(f"row {i} out of range in column {j}")
                if v:
                    clean[i] = int(v)
            self.columns.append(clean)

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> 'BoundaryMatrix':
        return cls(n_rows, [{} for _ in range(n_cols)])

    @classmethod
    def from_dense(cls, rows) -> 'BoundaryMatrix':
        if len(rows) == 0:
            return cls(0, [])
        a = np.array(rows, dtype=object)
        if a.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        n_rows, n_cols = a.shape
        cols = [{i: int(a[i, j]) for i in range(n_rows) if a[i, j]} for j in range(n_cols)]
        return cls(n_rows, cols)

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def column(self, j: int) -> Dict[int, int]:
        return self.columns[j]

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n_rows, self.n_cols), dtype=object)
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                a[i, j] = v
        return a

    def apply(self, vector: Mapping[int, int]) -> Dict[int, int]:
        """Matrix times a sparse column vector"""
        out: Dict[int, int] = {}
        for j, x in vector.items():
            if not x:
                continue
            for i, v in self.columns[j].items():
                s = out.get(i, 0) + v * x
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def compose(self, other: 'BoundaryMatrix') -> 'BoundaryMatrix':
        """self · other"""
        if other.n_rows != self.n_cols:
            raise ValueError(f"shape mismatch {self.shape} · {other.shape}")
        return BoundaryMatrix(self.n_rows, [self.apply(col) for col in other.columns])

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def select(self, rows: List[int], cols: List[int]) -> 'BoundaryMatrix':
        """Submatrix on the given rows and columns, renumbered in the given order"""
        where = {r: k for k, r in enumerate(rows)}
        out = []
        for j in cols:
            out.append({where[i]: v for i, v in self.columns[j].items() if i in where})
        return BoundaryMatrix(len(rows), out)

    def __repr__(self):
        return f"BoundaryMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz})"
