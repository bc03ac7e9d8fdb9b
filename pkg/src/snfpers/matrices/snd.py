"""
Smith Normal Decompositions over a Euclidean domain.

``snd(A)`` returns ``(U, D, V)`` with ``U⁻¹·A·V = D``: D is diagonal with
canonical entries ``d_1 | d_2 | … | d_r`` and U, V are products of elementary
matrices.  U is accumulated directly: a row operation ``E`` on the working
matrix multiplies U on the right by ``E⁻¹``.

Reduction
---------
For ``k = 0, 1, …``:

1. pick the nonzero entry of minimal norm in the active submatrix (rows and
   columns ``≥ k``), ties broken by smallest ``(row, col)``; stop if there is
   none,
2. swap it to ``(k, k)``,
3. clear row k by column transvections, then column k by row transvections,
   using the quotients of :meth:`EuclideanRing.div_rem`,
4. if a remainder survived, go back to 1 (the norm strictly drops); if the
   pivot does not divide some interior entry, add that entry's row to row k
   and go back to 1.

Finally every diagonal entry is made canonical by a column dilation.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np

from snfpers.errors import InvariantViolation
from snfpers.matrices.dense import (
    Dilate,
    ElementaryOp,
    Matrix,
    Side,
    Swap,
    Transvect,
)
from snfpers.rings import EuclideanRing

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SndResult:
    """A Smith Normal Decomposition ``U⁻¹·A·V = D``."""

    u: Matrix
    d: Matrix
    v: Matrix
    rank: int
    diagonal: tuple[Any, ...]


@dataclass(frozen=True)
class GradedSndResult:
    """An SND of a graded matrix with the degrees of the new homogeneous bases.

    ``new_row_degrees[j]`` is the degree of the basis element read from column
    j of U; ``new_col_degrees[i]`` the degree of column i of V.
    """

    snd: SndResult
    new_row_degrees: tuple[int, ...]
    new_col_degrees: tuple[int, ...]


@dataclass(frozen=True)
class KernelColumn:
    """Coordinates of one kernel basis vector in the domain's original basis."""

    coords: tuple[Any, ...]
    degree: int | None = None


# ---------------------------------------------------------------------------
# Reduction state
# ---------------------------------------------------------------------------

StepHook = Callable[["Reduction", ElementaryOp], None]


class Reduction:
    """Working matrix plus the accumulated U and V of one factorization.

    When degrees are given they are permuted along with rows and columns so
    that they always describe the current working matrix.
    """

    def __init__(
        self,
        a: Matrix,
        row_degrees: tuple[int, ...] | None = None,
        col_degrees: tuple[int, ...] | None = None,
        hook: StepHook | None = None,
    ) -> None:
        self.ring: EuclideanRing = a.ring
        m, n = a.shape
        self.d = a.entries.copy()
        self.u = Matrix.identity(a.ring, m).entries.copy()
        self.v = Matrix.identity(a.ring, n).entries.copy()
        self.row_degrees = list(row_degrees) if row_degrees is not None else None
        self.col_degrees = list(col_degrees) if col_degrees is not None else None
        self.hook = hook
        self.steps = 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.d.shape

    def _after(self, op: ElementaryOp) -> None:
        self.steps += 1
        if self.hook is not None:
            self.hook(self, op)

    # -- elementary steps ----------------------------------------------------

    def swap_rows(self, k1: int, k2: int) -> None:
        if k1 == k2:
            return
        self.d[[k1, k2]] = self.d[[k2, k1]]
        self.u[:, [k1, k2]] = self.u[:, [k2, k1]]
        if self.row_degrees is not None:
            rd = self.row_degrees
            rd[k1], rd[k2] = rd[k2], rd[k1]
        self._after(ElementaryOp(Swap(k1, k2), Side.ROW))

    def swap_cols(self, k1: int, k2: int) -> None:
        if k1 == k2:
            return
        self.d[:, [k1, k2]] = self.d[:, [k2, k1]]
        self.v[:, [k1, k2]] = self.v[:, [k2, k1]]
        if self.col_degrees is not None:
            cd = self.col_degrees
            cd[k1], cd[k2] = cd[k2], cd[k1]
        self._after(ElementaryOp(Swap(k1, k2), Side.COL))

    def add_row_multiple(self, target: int, source: int, alpha: Any) -> None:
        """row_target += alpha·row_source; U gets col_source -= alpha·col_target."""
        d, u = self.d, self.u
        for j in range(d.shape[1]):
            if d[source, j]:
                d[target, j] = d[target, j] + alpha * d[source, j]
        for i in range(u.shape[0]):
            if u[i, target]:
                u[i, source] = u[i, source] - alpha * u[i, target]
        self._after(ElementaryOp(Transvect(target, source, alpha), Side.ROW))

    def add_col_multiple(self, target: int, source: int, alpha: Any) -> None:
        """col_target += alpha·col_source, mirrored on V."""
        for arr in (self.d, self.v):
            for i in range(arr.shape[0]):
                if arr[i, source]:
                    arr[i, target] = arr[i, target] + alpha * arr[i, source]
        self._after(ElementaryOp(Transvect(target, source, alpha), Side.COL))

    def scale_col(self, k: int, unit: Any) -> None:
        for arr in (self.d, self.v):
            for i in range(arr.shape[0]):
                arr[i, k] = arr[i, k] * unit
        self._after(ElementaryOp(Dilate(k, unit), Side.COL))

    # -- pivoting ------------------------------------------------------------

    def find_pivot(self, k: int, key: Callable[[Any], Any]) -> tuple[int, int] | None:
        """Nonzero active entry minimising *key*; first in (row, col) order on ties."""
        m, n = self.shape
        best: tuple[int, int] | None = None
        best_key = None
        for j in range(k, m):
            for i in range(k, n):
                e = self.d[j, i]
                if not e:
                    continue
                kk = key(e)
                if best is None or kk < best_key:
                    best, best_key = (j, i), kk
        return best

    def move_pivot(self, k: int, pos: tuple[int, int]) -> None:
        self.swap_rows(k, pos[0])
        self.swap_cols(k, pos[1])

    def eliminate(self, k: int, exact: bool = False) -> bool:
        """Clear row k, then column k, against the pivot at ``(k, k)``.

        Returns ``True`` when both are fully cleared.  With ``exact=True`` a
        nonzero remainder is an :class:`InvariantViolation`.
        """
        ring = self.ring
        m, n = self.shape
        pivot = self.d[k, k]
        for i in range(k + 1, n):
            e = self.d[k, i]
            if e:
                q, r = ring.div_rem(e, pivot)
                if exact and r:
                    raise InvariantViolation(
                        f"pivot {ring.format(pivot)} does not divide {ring.format(e)}"
                    )
                if q:
                    self.add_col_multiple(i, k, -q)
        for j in range(k + 1, m):
            e = self.d[j, k]
            if e:
                q, r = ring.div_rem(e, pivot)
                if exact and r:
                    raise InvariantViolation(
                        f"pivot {ring.format(pivot)} does not divide {ring.format(e)}"
                    )
                if q:
                    self.add_row_multiple(j, k, -q)
        return not any(self.d[k, k + 1:]) and not any(self.d[k + 1:, k])

    def find_non_divisible(self, k: int) -> int | None:
        """Row index of an interior entry the pivot does not divide, if any."""
        ring = self.ring
        m, n = self.shape
        pivot = self.d[k, k]
        for j in range(k + 1, m):
            for i in range(k + 1, n):
                e = self.d[j, i]
                if e and not ring.divides(pivot, e):
                    return j
        return None

    def normalize_diagonal(self, rank: int) -> None:
        ring = self.ring
        one = ring.one()
        for k in range(rank):
            unit, _ = ring.unit_normalize(self.d[k, k])
            if unit != one:
                self.scale_col(k, ring.unit_inverse(unit))

    def result(self, rank: int) -> SndResult:
        diagonal = tuple(self.d[k, k] for k in range(rank))
        return SndResult(
            u=Matrix(self.ring, self.u),
            d=Matrix(self.ring, self.d),
            v=Matrix(self.ring, self.v),
            rank=rank,
            diagonal=diagonal,
        )


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def _settle_pivot(red: Reduction, k: int) -> bool:
    ring = red.ring
    while True:
        pos = red.find_pivot(k, ring.norm)
        if pos is None:
            return False
        red.move_pivot(k, pos)
        if not red.eliminate(k):
            continue
        bad = red.find_non_divisible(k)
        if bad is None:
            return True
        red.add_row_multiple(k, bad, ring.one())


def snd(a: Matrix) -> SndResult:
    """Smith Normal Decomposition of *a* (zero and empty matrices allowed)."""
    red = Reduction(a)
    m, n = a.shape
    rank = 0
    for k in range(min(m, n)):
        if not _settle_pivot(red, k):
            break
        rank += 1
    red.normalize_diagonal(rank)
    _logger.debug(
        "snd %dx%d over %s: rank %d after %d elementary steps",
        m, n, a.ring.label, rank, red.steps,
    )
    return red.result(rank)


def snf_diagonal(a: Matrix) -> tuple[Any, ...]:
    """Nonzero invariant factors ``d_1 | … | d_r`` of *a*."""
    return snd(a).diagonal


def is_invertible(m: Matrix) -> bool:
    """A square matrix is invertible iff its Smith Normal Form is the identity."""
    if m.nrows != m.ncols:
        return False
    res = snd(m)
    one = m.ring.one()
    return res.rank == m.nrows and all(d == one for d in res.diagonal)


def verify_snd(a: Matrix, res: SndResult) -> bool:
    """Check that *res* is a Smith Normal Decomposition of *a*.

    Verifies ``A·V == U·D`` (no inverses needed), that U and V are invertible,
    that D is diagonal with the recorded canonical entries, and the
    divisibility chain.  Entries outside the ring make the check fail.
    """
    ring = a.ring
    m, n = a.shape
    if res.u.shape != (m, m) or res.d.shape != (m, n) or res.v.shape != (n, n):
        _logger.debug("verify_snd: shape mismatch")
        return False
    for factor in (res.u, res.d, res.v):
        if factor.ring != ring or not all(ring.contains(e) for e in factor.entries.flat):
            _logger.debug("verify_snd: factor has entries outside %s", ring.label)
            return False
    r = res.rank
    if r != len(res.diagonal) or r > min(m, n):
        return False
    for (j, i), e in np.ndenumerate(res.d.entries):
        expected = res.diagonal[j] if j == i and j < r else ring.zero()
        if e != expected:
            _logger.debug("verify_snd: D(%d,%d) is not as recorded", j, i)
            return False
    for k, dk in enumerate(res.diagonal):
        if ring.is_zero(dk) or ring.canonical(dk) != dk:
            _logger.debug("verify_snd: d_%d is zero or not canonical", k)
            return False
        if k + 1 < r and not ring.divides(dk, res.diagonal[k + 1]):
            _logger.debug("verify_snd: d_%d does not divide d_%d", k, k + 1)
            return False
    if a @ res.v != res.u @ res.d:
        _logger.debug("verify_snd: A·V != U·D")
        return False
    if not (is_invertible(res.u) and is_invertible(res.v)):
        _logger.debug("verify_snd: U or V is not invertible")
        return False
    return True


def kernel_columns(res: SndResult | GradedSndResult) -> list[KernelColumn]:
    """Columns ``r, …, n-1`` of V: a basis of the kernel in original coordinates.

    For a graded result each column carries its degree.
    """
    if isinstance(res, GradedSndResult):
        base, degrees = res.snd, res.new_col_degrees
    else:
        base, degrees = res, None
    v = base.v
    return [
        KernelColumn(v.column(i), degrees[i] if degrees is not None else None)
        for i in range(base.rank, v.ncols)
    ]
