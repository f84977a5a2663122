"""Exact linear algebra over the rationals.

Small dense systems only; everything here is plain Gaussian elimination on
lists of Fraction rows, which is all the invariant computations need.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]

__all__ = ["row_echelon", "nullspace", "solve", "rank"]


def _copy(matrix: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in matrix]


def row_echelon(matrix: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    m = _copy(matrix)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(row_echelon(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """A basis of the right kernel, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the result is unique given the column order.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(matrix[0])
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    echelon, pivots = row_echelon(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis: Matrix = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -echelon[r][f]
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """The unique solution of matrix @ x = rhs.

    Raises ValueError if the system is inconsistent or underdetermined; use
    this only where the theory guarantees a unique answer.
    """
    if not matrix:
        raise ValueError("cannot solve an empty system")
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    echelon, pivots = row_echelon(augmented)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = echelon[r][ncols]
    return solution
