"""Exact linear algebra over Q, sized for the degree-16 tower."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


class LinearSystemError(ValueError):
    """Raised when a linear system has no solution."""


def _to_matrix(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    out = [[Fraction(c) for c in row] for row in rows]
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def rref(rows: Sequence[Sequence[int | Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    Pivoting is deterministic: the first nonzero entry in column order.
    """
    m = _to_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((k for k in range(row, len(m)) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [c * inv for c in m[row]]
        for k in range(len(m)):
            if k != row and m[k][col] != 0:
                factor = m[k][col]
                m[k] = [a - factor * b for a, b in zip(m[k], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def solve(rows: Sequence[Sequence[int | Fraction]],
          rhs: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve A x = b exactly.

    Raises LinearSystemError("inconsistent") when no solution exists. For
    underdetermined consistent systems the free variables are set to zero,
    which makes the answer deterministic.
    """
    m = _to_matrix(rows)
    b = [Fraction(c) for c in rhs]
    if len(m) != len(b):
        raise ValueError("dimension mismatch between matrix and rhs")
    if not m:
        if any(c != 0 for c in b):
            raise LinearSystemError("inconsistent")
        return []
    ncols = len(m[0])
    augmented = [row + [bk] for row, bk in zip(m, b)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        raise LinearSystemError("inconsistent")
    x = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        x[col] = reduced[k][ncols]
    return x


def nullspace(rows: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of A, one vector per free column."""
    m = _to_matrix(rows)
    if not m:
        return []
    ncols = len(m[0])
    reduced, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, col in enumerate(pivots):
            v[col] = -reduced[k][f]
        basis.append(v)
    return basis
