"""
Dense matrices over a Euclidean ring and elementary row/column operations.

Entries live in a numpy object array that is made read-only once the
:class:`Matrix` is built; every operation returns a new matrix.

Indices are 0-based throughout.  A row transvection ``Transvect(t, s, α)``
adds ``α·row_s`` to ``row_t``; a column transvection adds ``α·col_s`` to
``col_t``.  Row operations are left multiplication by the elementary matrix,
column operations right multiplication.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from snfpers.errors import RingMismatchError
from snfpers.rings import EuclideanRing


class Matrix:
    """Immutable m×n matrix over *ring*."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: EuclideanRing, entries: np.ndarray) -> None:
        if entries.ndim != 2:
            raise ValueError(f"matrix entries must be 2-dimensional, got {entries.ndim}")
        if entries.dtype != object:
            entries = entries.astype(object)
        entries.setflags(write=False)
        self.ring = ring
        self.entries = entries

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        ring: EuclideanRing,
        rows: Sequence[Sequence[Any]],
        ncols: int | None = None,
    ) -> Matrix:
        """Build a matrix from nested sequences, coercing every entry into *ring*.

        *ncols* is only needed for matrices with zero rows.
        """
        m = len(rows)
        n = len(rows[0]) if m else (ncols or 0)
        if ncols is not None and ncols != n:
            raise ValueError(f"expected {ncols} columns, got {n}")
        arr = np.empty((m, n), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for j, value in enumerate(row):
                arr[i, j] = ring.coerce(value)
        return cls(ring, arr)

    @classmethod
    def zeros(cls, ring: EuclideanRing, m: int, n: int) -> Matrix:
        arr = np.empty((m, n), dtype=object)
        arr.fill(ring.zero())
        return cls(ring, arr)

    @classmethod
    def identity(cls, ring: EuclideanRing, n: int) -> Matrix:
        arr = np.empty((n, n), dtype=object)
        arr.fill(ring.zero())
        for i in range(n):
            arr[i, i] = ring.one()
        return cls(ring, arr)

    @classmethod
    def from_columns(
        cls, ring: EuclideanRing, columns: Sequence[Sequence[Any]], nrows: int
    ) -> Matrix:
        """Build an ``nrows × len(columns)`` matrix from column vectors."""
        arr = np.empty((nrows, len(columns)), dtype=object)
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError(f"column {j} has {len(col)} entries, expected {nrows}")
            for i, value in enumerate(col):
                arr[i, j] = value
        return cls(ring, arr)

    # -- shape and access ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def nrows(self) -> int:
        return self.entries.shape[0]

    @property
    def ncols(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, key: tuple[int, int]) -> Any:
        return self.entries[key]

    def row(self, i: int) -> tuple[Any, ...]:
        return tuple(self.entries[i, :])

    def column(self, j: int) -> tuple[Any, ...]:
        return tuple(self.entries[:, j])

    def rows(self) -> list[list[Any]]:
        return [list(r) for r in self.entries]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
        r = np.asarray(list(rows), dtype=np.intp)
        c = np.asarray(list(cols), dtype=np.intp)
        return Matrix(self.ring, self.entries[np.ix_(r, c)].copy())

    def hstack(self, other: Matrix) -> Matrix:
        if other.nrows != self.nrows:
            raise ValueError(f"cannot stack {self.shape} beside {other.shape}")
        return Matrix(self.ring, np.hstack([self.entries, other.entries]))

    # -- algebra -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(bool(e) for e in self.entries.flat)

    def transpose(self) -> Matrix:
        return Matrix(self.ring, self.entries.T.copy())

    def map_entries(
        self, fn: Callable[[Any], Any], ring: EuclideanRing | None = None
    ) -> Matrix:
        arr = np.empty(self.shape, dtype=object)
        for idx, e in np.ndenumerate(self.entries):
            arr[idx] = fn(e)
        return Matrix(ring or self.ring, arr)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(
                f"cannot multiply {self.ring.label} and {other.ring.label} matrices"
            )
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        zero = self.ring.zero()
        arr = np.empty((m, n), dtype=object)
        a, b = self.entries, other.entries
        for i in range(m):
            for j in range(n):
                acc = zero
                for t in range(k):
                    if a[i, t] and b[t, j]:
                        acc = acc + a[i, t] * b[t, j]
                arr[i, j] = acc
        return Matrix(self.ring, arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and all(x == y for x, y in zip(self.entries.flat, other.entries.flat))
        )

    __hash__ = None  # type: ignore[assignment]

    def format_rows(self) -> list[list[str]]:
        return [[self.ring.format(e) for e in row] for row in self.entries]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(r) for r in self.format_rows())
        return f"Matrix({self.ring.label}, {self.nrows}x{self.ncols}, [{body}])"


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

class Side(enum.Enum):
    ROW = "row"
    COL = "col"


@dataclass(frozen=True)
class Swap:
    """Exchange lines *k1* and *k2* (``Swap(k, k)`` is the identity)."""

    k1: int
    k2: int


@dataclass(frozen=True)
class Dilate:
    """Multiply line *k* by the unit *unit*."""

    k: int
    unit: Any


@dataclass(frozen=True)
class Transvect:
    """Add ``alpha`` times line *source* to line *target*."""

    target: int
    source: int
    alpha: Any


@dataclass(frozen=True)
class ElementaryOp:
    kind: Swap | Dilate | Transvect
    side: Side


def _check_index(k: int, size: int, side: Side) -> None:
    if not 0 <= k < size:
        raise IndexError(f"{side.value} index {k} out of range for size {size}")


def apply_in_place(arr: np.ndarray, ring: EuclideanRing, op: ElementaryOp) -> None:
    """Apply *op* to the writable object array *arr*."""
    size = arr.shape[0] if op.side is Side.ROW else arr.shape[1]
    view = arr if op.side is Side.ROW else arr.T
    kind = op.kind
    if isinstance(kind, Swap):
        _check_index(kind.k1, size, op.side)
        _check_index(kind.k2, size, op.side)
        if kind.k1 != kind.k2:
            view[[kind.k1, kind.k2]] = view[[kind.k2, kind.k1]]
    elif isinstance(kind, Dilate):
        _check_index(kind.k, size, op.side)
        unit = ring.coerce(kind.unit)
        if not ring.is_unit(unit):
            raise ValueError(f"dilation factor {ring.format(unit)} is not a unit")
        for j in range(view.shape[1]):
            view[kind.k, j] = view[kind.k, j] * unit
    elif isinstance(kind, Transvect):
        _check_index(kind.target, size, op.side)
        _check_index(kind.source, size, op.side)
        if kind.target == kind.source:
            raise ValueError("transvection target and source must differ")
        alpha = ring.coerce(kind.alpha)
        for j in range(view.shape[1]):
            src = view[kind.source, j]
            if src:
                view[kind.target, j] = view[kind.target, j] + alpha * src
    else:
        raise TypeError(f"unknown elementary operation {kind!r}")


def apply_elementary(m: Matrix, op: ElementaryOp) -> Matrix:
    """Return the result of applying *op* to *m*."""
    arr = m.entries.copy()
    apply_in_place(arr, m.ring, op)
    return Matrix(m.ring, arr)
