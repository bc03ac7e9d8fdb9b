"""
Graded matrices over 𝔽[x] and their Smith Normal Decomposition.

A :class:`GradedMatrix` is the matrix of a graded homomorphism between free
graded modules written in homogeneous bases: row j stands for a codomain basis
element of degree ``row_degrees[j]``, column i for a domain basis element of
degree ``col_degrees[i]``, and every nonzero entry is a monomial of degree
``col_degrees[i] - row_degrees[j]``.

:func:`graded_snd` runs the same reduction as :func:`~snfpers.matrices.snd.snd`
but chooses the pivot of minimal degree.  A minimal-degree monomial divides
every entry of its row and column, so each elimination is exact and every
intermediate matrix stays graded; ``check_steps=True`` asserts that after every
single elementary operation.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from snfpers.errors import GradingError, InvariantViolation
from snfpers.matrices.dense import ElementaryOp, Matrix
from snfpers.matrices.snd import GradedSndResult, Reduction
from snfpers.rings import PolynomialRing, degh

_logger = logging.getLogger(__name__)


def _degree_mismatch(
    entries: Any, row_degrees: Sequence[int], col_degrees: Sequence[int]
) -> tuple[int, int, Any] | None:
    m, n = entries.shape
    for j in range(m):
        for i in range(n):
            e = entries[j, i]
            if e and degh(e) != col_degrees[i] - row_degrees[j]:
                return j, i, e
    return None


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix over 𝔽[x] with homogeneous row and column bases."""

    base: Matrix
    row_degrees: tuple[int, ...]
    col_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_degrees", tuple(self.row_degrees))
        object.__setattr__(self, "col_degrees", tuple(self.col_degrees))
        if not isinstance(self.base.ring, PolynomialRing):
            raise GradingError(
                f"graded matrices live over a polynomial ring, not {self.base.ring.label}"
            )
        m, n = self.base.shape
        if len(self.row_degrees) != m or len(self.col_degrees) != n:
            raise GradingError(
                f"{m}x{n} matrix needs {m} row and {n} column degrees, got "
                f"{len(self.row_degrees)} and {len(self.col_degrees)}"
            )
        for d in (*self.row_degrees, *self.col_degrees):
            if not isinstance(d, int) or d < 0:
                raise GradingError(f"basis degrees must be natural numbers, got {d!r}")
        bad = _degree_mismatch(self.base.entries, self.row_degrees, self.col_degrees)
        if bad is not None:
            j, i, e = bad
            raise GradingError(
                f"entry ({j},{i}) = {self.ring.format(e)} is not a monomial of degree "
                f"{self.col_degrees[i]} - {self.row_degrees[j]}"
            )

    @classmethod
    def from_rows(
        cls,
        ring: PolynomialRing,
        rows: Sequence[Sequence[Any]],
        row_degrees: Sequence[int],
        col_degrees: Sequence[int],
    ) -> GradedMatrix:
        return cls(
            Matrix.from_rows(ring, rows, ncols=len(col_degrees)),
            tuple(row_degrees),
            tuple(col_degrees),
        )

    @property
    def ring(self) -> PolynomialRing:
        return self.base.ring  # type: ignore[return-value]

    @property
    def shape(self) -> tuple[int, int]:
        return self.base.shape

    def specialize(self) -> Matrix:
        """Substitute ``x := 1``: the matrix over the coefficient field."""
        ring = self.ring
        return self.base.map_entries(lambda e: ring.evaluate(e, 1), ring=ring.field)


def _step_checker(red: Reduction, op: ElementaryOp) -> None:
    bad = _degree_mismatch(red.d, red.row_degrees, red.col_degrees)
    if bad is not None:
        j, i, e = bad
        raise InvariantViolation(
            f"{op.side.value} operation {op.kind} broke homogeneity at ({j},{i}): "
            f"{red.ring.format(e)}"
        )


def _check_basis_degrees(
    factor: Any, original: Sequence[int], new: Sequence[int], which: str
) -> None:
    size = factor.shape[0]
    for c in range(size):
        for i in range(size):
            e = factor[i, c]
            if e and degh(e) + original[i] != new[c]:
                raise InvariantViolation(
                    f"column {c} of {which} is not homogeneous of degree {new[c]}"
                )


def graded_snd(g: GradedMatrix, check_steps: bool = False) -> GradedSndResult:
    """Graded Smith Normal Decomposition with monic monomial diagonal ``x^{t_k}``.

    ``new_row_degrees``/``new_col_degrees`` are the degrees of the homogeneous
    bases given by the columns of U and V.
    """
    red = Reduction(
        g.base,
        row_degrees=g.row_degrees,
        col_degrees=g.col_degrees,
        hook=_step_checker if check_steps else None,
    )
    m, n = g.shape
    rank = 0
    for k in range(min(m, n)):
        pos = red.find_pivot(k, degh)
        if pos is None:
            break
        red.move_pivot(k, pos)
        if not red.eliminate(k, exact=True):
            raise InvariantViolation(f"pivot {k} left a nonzero entry in its row or column")
        rank += 1
    red.normalize_diagonal(rank)
    res = GradedSndResult(
        snd=red.result(rank),
        new_row_degrees=tuple(red.row_degrees),
        new_col_degrees=tuple(red.col_degrees),
    )
    if check_steps:
        _check_basis_degrees(res.snd.u.entries, g.row_degrees, res.new_row_degrees, "U")
        _check_basis_degrees(res.snd.v.entries, g.col_degrees, res.new_col_degrees, "V")
    _logger.debug(
        "graded_snd %dx%d over %s: diagonal degrees %s after %d steps",
        m, n, g.ring.label, [degh(d) for d in res.snd.diagonal], red.steps,
    )
    return res
