"""Smith normal form over ℤ with exact (object dtype) numpy arrays"""

from typing import List, Tuple

import numpy as np


def _as_matrix(A) -> np.ndarray:
    a = np.array(A, dtype=object)
    if a.size == 0:
        rows = len(A) if hasattr(A, '__len__') else 0
        cols = a.shape[1] if a.ndim == 2 else 0
        return np.zeros((rows, cols), dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-dimensional integer matrix")
    return a


def _min_pivot(D: np.ndarray, t: int):
    best = None
    m, n = D.shape
    for i in range(t, m):
        for j in range(t, n):
            x = D[i, j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(A) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Smith normal form of an integer matrix

    Pivots on the smallest nonzero magnitude, reducing its row and column by
    division with remainder until both are clear and the pivot divides the
    remaining block.

    Args:
        A: Integer matrix (nested lists or numpy array)

    Returns:
        (U, D, V) with U @ A @ V == D, U and V unimodular, D diagonal with
        d_1 | d_2 | ... and non-negative entries
    """
    A = _as_matrix(A)
    m, n = A.shape
    D = A.copy()
    U = np.eye(m, dtype=object)
    V = np.eye(n, dtype=object)

    for t in range(min(m, n)):
        while True:
            found = _min_pivot(D, t)
            if found is None:
                return U, D, V
            _, i, j = found
            if i != t:
                D[[t, i]] = D[[i, t]]
                U[[t, i]] = U[[i, t]]
            if j != t:
                D[:, [t, j]] = D[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]

            p = D[t, t]
            clear = True
            for i in range(t + 1, m):
                if D[i, t]:
                    q = D[i, t] // p
                    D[i] -= q * D[t]
                    U[i] -= q * U[t]
                    if D[i, t]:
                        clear = False
            for j in range(t + 1, n):
                if D[t, j]:
                    q = D[t, j] // p
                    D[:, j] -= q * D[:, t]
                    V[:, j] -= q * V[:, t]
                    if D[t, j]:
                        clear = False
            if not clear:
                continue

            # pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i, j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            D[t] += D[bad]
            U[t] += U[bad]

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
    return U, D, V


def invariant_factors(A) -> List[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order"""
    _, D, _ = smith_normal_form(A)
    k = min(D.shape) if D.size else 0
    return [int(D[i, i]) for i in range(k) if D[i, i]]


def rank(A) -> int:
    return len(invariant_factors(A))


def is_unimodular(M: np.ndarray) -> bool:
    """Square integer matrix with determinant ±1 (exact, via the Smith form)"""
    M = _as_matrix(M)
    if M.shape[0] != M.shape[1]:
        return False
    if M.shape[0] == 0:
        return True
    factors = invariant_factors(M)
    return len(factors) == M.shape[0] and all(f == 1 for f in factors)
