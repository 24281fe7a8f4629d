"""Exact arithmetic on integral symmetric bilinear forms."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def as_matrix(Q) -> np.ndarray:
    """Convert to a square object array of Python ints."""
    arr = np.array(Q, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"intersection form must be a square matrix, got shape {arr.shape}")
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr.reshape(arr.shape)


def bilinear(Q, x: Sequence, y: Sequence):
    """``x^T Q y`` in exact arithmetic (ints or Fractions)."""
    n = len(Q)
    total = 0
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        row = Q[i]
        s = 0
        for j in range(n):
            if row[j] and y[j]:
                s += row[j] * y[j]
        total += xi * s
    return total


def square(Q, x: Sequence):
    return bilinear(Q, x, x)


def is_symmetric(Q) -> bool:
    n = len(Q)
    return all(Q[i][j] == Q[j][i] for i in range(n) for j in range(i + 1, n))


def diagonalize(Q) -> list[Fraction] | None:
    """Diagonal entries of a rational congruence diagonalization of ``Q``.

    Returns ``None`` when ``Q`` is degenerate.  A zero pivot is handled by
    swapping in a later nonzero diagonal entry, or, when the remaining
    diagonal vanishes, by the congruence ``e_i -> e_i + e_j`` which turns an
    off-diagonal ``a_ij`` into the diagonal entry ``2 a_ij``.
    """
    n = len(Q)
    A = [[Fraction(Q[i][j]) for j in range(n)] for i in range(n)]
    diag: list[Fraction] = []
    for p in range(n):
        if A[p][p] == 0:
            swap = next((q for q in range(p + 1, n) if A[q][q] != 0), None)
            if swap is not None:
                A[p], A[swap] = A[swap], A[p]
                for row in A:
                    row[p], row[swap] = row[swap], row[p]
            else:
                j = next((q for q in range(p + 1, n) if A[p][q] != 0), None)
                if j is None:
                    return None
                for k in range(n):
                    A[p][k] += A[j][k]
                for k in range(n):
                    A[k][p] += A[k][j]
        piv = A[p][p]
        for i in range(p + 1, n):
            f = A[i][p] / piv
            if f:
                for k in range(p, n):
                    A[i][k] -= f * A[p][k]
        for i in range(p + 1, n):
            A[p][i] = Fraction(0)
        diag.append(piv)
    return diag


def signature(Q) -> tuple[int, int] | None:
    """``(positive, negative)`` inertia of a nondegenerate form, else ``None``."""
    diag = diagonalize(Q)
    if diag is None:
        return None
    pos = sum(1 for d in diag if d > 0)
    return pos, len(diag) - pos


def determinant(Q) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(Q)
    A = [[Fraction(Q[i][j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for p in range(n):
        piv = next((r for r in range(p, n) if A[r][p] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != p:
            A[p], A[piv] = A[piv], A[p]
            det = -det
        det *= A[p][p]
        for r in range(p + 1, n):
            f = A[r][p] / A[p][p]
            if f:
                for k in range(p, n):
                    A[r][k] -= f * A[p][k]
    return det


def is_characteristic(Q, c: Sequence[int]) -> bool:
    """``Q(c, h_k) = Q(h_k, h_k) mod 2`` for every basis vector ``h_k``."""
    n = len(Q)
    for k in range(n):
        if (sum(Q[k][j] * c[j] for j in range(n)) - Q[k][k]) % 2:
            return False
    return True


def characteristic_representative(Q) -> list[int] | None:
    """A characteristic vector with entries in {0, 1}, or ``None`` if none exists.

    Solves ``Q c = diag(Q)`` over GF(2); unimodular forms always have a
    solution.
    """
    n = len(Q)
    rows = [[int(Q[i][j]) % 2 for j in range(n)] + [int(Q[i][i]) % 2] for i in range(n)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][n] for i in range(r, n)):
        return None
    c = [0] * n
    for i, col in enumerate(pivots):
        c[col] = rows[i][n]
    return c
