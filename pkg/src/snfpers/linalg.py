"""
Gaussian elimination over a field (ℚ or ℤ_p).

These routines know nothing about Smith forms; the persistence oracle and the
essential-bar cross-check use them as an independent second opinion.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from snfpers.errors import RingMismatchError
from snfpers.matrices import Matrix
from snfpers.rings import Field


@dataclass(frozen=True)
class RowReduceResult:
    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def _field_of(m: Matrix) -> Field:
    if not isinstance(m.ring, Field):
        raise RingMismatchError(f"Gaussian elimination needs a field, not {m.ring.label}")
    return m.ring


def row_reduce(m: Matrix) -> RowReduceResult:
    """Reduced row echelon form of *m* with its pivot columns."""
    field = _field_of(m)
    mat = m.entries.copy()
    nrows, ncols = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        pivot = next((r for r in range(row, nrows) if mat[r, col]), None)
        if pivot is None:
            continue
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        inv = field.inverse(mat[row, col])
        for c in range(col, ncols):
            mat[row, c] = mat[row, c] * inv
        for r in range(nrows):
            factor = mat[r, col]
            if r != row and factor:
                for c in range(col, ncols):
                    if mat[row, c]:
                        mat[r, c] = mat[r, c] - factor * mat[row, c]
        pivots.append(col)
        row += 1
    return RowReduceResult(Matrix(field, mat), len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return row_reduce(m).rank


def nullspace_basis(m: Matrix) -> list[tuple[Any, ...]]:
    """Basis of ``{v : m·v = 0}``, one vector per free column."""
    field = _field_of(m)
    reduced = row_reduce(m)
    mat = reduced.matrix.entries
    n = m.ncols
    pivot_set = set(reduced.pivots)
    basis = []
    for free in (c for c in range(n) if c not in pivot_set):
        vec = [field.zero()] * n
        vec[free] = field.one()
        for r, col in enumerate(reduced.pivots):
            if mat[r, free]:
                vec[col] = -mat[r, free]
        basis.append(tuple(vec))
    return basis


def columns_matrix(field: Field, columns: Sequence[Sequence[Any]], nrows: int) -> Matrix:
    return Matrix.from_columns(field, columns, nrows)


def solve(m: Matrix, rhs: Sequence[Any]) -> tuple[Any, ...] | None:
    """A solution x of ``m·x = rhs`` or ``None`` when the system is inconsistent."""
    field = _field_of(m)
    nrows, ncols = m.shape
    if len(rhs) != nrows:
        raise ValueError(f"right-hand side has {len(rhs)} entries, expected {nrows}")
    column = np.empty((nrows, 1), dtype=object)
    for i, value in enumerate(rhs):
        column[i, 0] = value
    reduced = row_reduce(m.hstack(Matrix(field, column)))
    if ncols in reduced.pivots:
        return None
    x = [field.zero()] * ncols
    mat = reduced.matrix.entries
    for r, col in enumerate(reduced.pivots):
        x[col] = mat[r, ncols]
    return tuple(x)


def in_span(field: Field, columns: Sequence[Sequence[Any]], vector: Sequence[Any]) -> bool:
    """True iff *vector* is a linear combination of *columns*."""
    if not any(vector):
        return True
    if not columns:
        return False
    return solve(columns_matrix(field, columns, len(vector)), vector) is not None
