"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``.  Everything here is small and
dense; the engine never needs more than a few dozen columns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = list
Matrix = list


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*rows)]


def column_space(matrix: Sequence[Sequence[Fraction]], nrows: int) -> Matrix:
    """Basis (as vectors of length ``nrows``) of the span of the columns."""
    if not matrix or not matrix[0]:
        return []
    basis, _ = rref(transpose(matrix))
    return basis


def nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {v : matrix v = 0}."""
    reduced, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], inner: int | None = None) -> Matrix:
    if not a:
        return []
    if not b:
        # a is (r x 0)
        return [[] for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][j] for k in range(len(row)) if row[k]), Fraction(0)) for j in range(cols)])
    return out


def is_zero(matrix: Sequence[Sequence[Fraction]]) -> bool:
    return all(x == 0 for row in matrix for x in row)
