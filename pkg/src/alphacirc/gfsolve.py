"""Dense Gaussian elimination over prime fields F_q (q small)."""

from __future__ import annotations

import numpy as np


def rref(A: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod q; returns (R, pivot column list)."""
    R = np.asarray(A, dtype=np.int64) % q
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i, c] % q), None)
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, q) % q
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % q
        pivots.append(c)
        r += 1
    return R, pivots


def solve_affine(
    A: np.ndarray, b: np.ndarray, q: int
) -> tuple[np.ndarray, list[np.ndarray]] | None:
    """Solve A x = b over F_q.

    Returns (particular solution, kernel basis) or None if inconsistent.
    An empty equation set yields the zero particular solution and the full
    standard kernel basis.
    """
    A = np.atleast_2d(np.asarray(A, dtype=np.int64)) % q
    b = np.asarray(b, dtype=np.int64) % q
    rows, cols = A.shape
    aug = np.hstack([A, b.reshape(-1, 1)]) if rows else np.zeros((0, cols + 1), dtype=np.int64)
    R, pivots = rref(aug, q)
    if cols in pivots:
        return None  # a row reduced to 0 = 1
    particular = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        particular[c] = R[r, cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r, f]) % q
        basis.append(v)
    return particular, basis
