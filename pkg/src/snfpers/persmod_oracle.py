"""
Finite-type persistence modules as explicit matrices, and a rank oracle.

A :class:`FiniteTypePersMod` stores ``dim V_t`` for ``t = 0 … T`` and the
consecutive structure maps ``V_t → V_{t+1}``; it is constant from T on.  Ranks
of the composed maps determine the module up to isomorphism, so a barcode is
certified by comparing, for every ``t ≤ s ≤ T``,

    rank(V_t → V_s) == #{J in barcode : [t, s] ⊆ J}.

:func:`from_filtration` builds ``H_n(K_•)`` by plain Gaussian elimination,
with no Smith forms involved.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from snfpers.barcode import Interval
from snfpers.errors import RingMismatchError
from snfpers.filtration import Filtration
from snfpers.linalg import in_span, nullspace_basis, rank, solve
from snfpers.matrices import Matrix
from snfpers.rings import Field, RationalField
from snfpers.simplicial import boundary_matrix, standard_basis

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteTypePersMod:
    """``(V_•, α_•)`` over *field*, constant on ``[horizon, ∞)``."""

    field: Field
    horizon: int
    dims: tuple[int, ...]
    structure_maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "structure_maps", tuple(self.structure_maps))
        if self.horizon < 0 or len(self.dims) != self.horizon + 1:
            raise ValueError(f"horizon {self.horizon} needs {self.horizon + 1} dimensions")
        if len(self.structure_maps) != self.horizon:
            raise ValueError(f"horizon {self.horizon} needs {self.horizon} structure maps")
        for t, m in enumerate(self.structure_maps):
            if m.ring != self.field:
                raise RingMismatchError(f"structure map {t} is over {m.ring.label}")
            if m.shape != (self.dims[t + 1], self.dims[t]):
                raise ValueError(
                    f"structure map {t} has shape {m.shape}, expected "
                    f"{(self.dims[t + 1], self.dims[t])}"
                )

    def dim_at(self, t: int) -> int:
        return self.dims[min(t, self.horizon)]


def _identity_or_zero(field: Field, rows: int, cols: int) -> Matrix:
    if rows == cols:
        return Matrix.identity(field, rows)
    return Matrix.zeros(field, rows, cols)


def zero_module(horizon: int = 0, field: Field | None = None) -> FiniteTypePersMod:
    field = field or RationalField()
    return FiniteTypePersMod(
        field,
        horizon,
        (0,) * (horizon + 1),
        tuple(Matrix.zeros(field, 0, 0) for _ in range(horizon)),
    )


def interval_module(
    interval: Interval, horizon: int, field: Field | None = None
) -> FiniteTypePersMod:
    """The interval module 𝔽_J truncated at *horizon*.

    The interval must be representable: a finite J has to end by the horizon
    and an infinite one has to start by it.
    """
    field = field or RationalField()
    if horizon < 0:
        raise ValueError(f"horizon must be a natural number, got {horizon}")
    if interval.death is not None and interval.death > horizon:
        raise ValueError(f"interval {interval} ends after horizon {horizon}")
    if interval.birth > horizon:
        raise ValueError(f"interval {interval} starts after horizon {horizon}")
    dims = tuple(1 if interval.contains(t) else 0 for t in range(horizon + 1))
    maps = tuple(
        _identity_or_zero(field, dims[t + 1], dims[t]) for t in range(horizon)
    )
    return FiniteTypePersMod(field, horizon, dims, maps)


def _pad(m: FiniteTypePersMod, horizon: int) -> FiniteTypePersMod:
    extra = horizon - m.horizon
    if extra == 0:
        return m
    last = m.dims[-1]
    return FiniteTypePersMod(
        m.field,
        horizon,
        m.dims + (last,) * extra,
        m.structure_maps + tuple(Matrix.identity(m.field, last) for _ in range(extra)),
    )


def _block_diagonal(field: Field, a: Matrix, b: Matrix) -> Matrix:
    arr = np.empty((a.nrows + b.nrows, a.ncols + b.ncols), dtype=object)
    arr.fill(field.zero())
    arr[: a.nrows, : a.ncols] = a.entries
    arr[a.nrows:, a.ncols:] = b.entries
    return Matrix(field, arr)


def direct_sum(a: FiniteTypePersMod, b: FiniteTypePersMod) -> FiniteTypePersMod:
    """Pointwise direct sum; the shorter module is extended by identities."""
    if a.field != b.field:
        raise RingMismatchError(f"cannot add modules over {a.field.label} and {b.field.label}")
    horizon = max(a.horizon, b.horizon)
    a, b = _pad(a, horizon), _pad(b, horizon)
    return FiniteTypePersMod(
        a.field,
        horizon,
        tuple(x + y for x, y in zip(a.dims, b.dims)),
        tuple(
            _block_diagonal(a.field, ma, mb)
            for ma, mb in zip(a.structure_maps, b.structure_maps)
        ),
    )


def direct_sum_of_intervals(
    intervals: Iterable[Interval], horizon: int, field: Field | None = None
) -> FiniteTypePersMod:
    field = field or RationalField()
    total = zero_module(horizon, field)
    for j in intervals:
        total = direct_sum(total, interval_module(j, horizon, field))
    return total


def rank_map(m: FiniteTypePersMod, t: int, s: int) -> int:
    """Rank of ``V_t → V_s``; indices past the horizon act as identities."""
    if not 0 <= t <= s:
        raise ValueError(f"need 0 <= t <= s, got t={t}, s={s}")
    start, stop = min(t, m.horizon), min(s, m.horizon)
    composed = Matrix.identity(m.field, m.dims[start])
    for k in range(start, stop):
        composed = m.structure_maps[k] @ composed
    return rank(composed)


def rank_table(m: FiniteTypePersMod) -> dict[tuple[int, int], int]:
    """``{(t, s): rank_map(m, t, s)}`` for ``0 ≤ t ≤ s ≤ T``."""
    return {
        (t, s): rank_map(m, t, s)
        for t in range(m.horizon + 1)
        for s in range(t, m.horizon + 1)
    }


# ---------------------------------------------------------------------------
# Persistent homology by brute force
# ---------------------------------------------------------------------------

class _ChainSpaces:
    """Cycles and boundaries of each K_t, as vectors in the standard basis of C_n(K_T)."""

    def __init__(self, filt: Filtration, n: int, field: Field) -> None:
        self.filt, self.n, self.field = filt, n, field
        self.basis = standard_basis(filt.complex, n)
        self.upper_basis = standard_basis(filt.complex, n + 1)
        self.lower = boundary_matrix(filt.complex, n, field)
        self.upper = boundary_matrix(filt.complex, n + 1, field)

    def cycles(self, t: int) -> list[tuple]:
        born = [i for i, s in enumerate(self.basis) if self.filt.birth[s] <= t]
        if not born:
            return []
        restricted = self.lower.submatrix(range(self.lower.nrows), born)
        out = []
        for v in nullspace_basis(restricted):
            full = [self.field.zero()] * len(self.basis)
            for i, c in zip(born, v):
                full[i] = c
            out.append(tuple(full))
        return out

    def boundaries(self, t: int) -> list[tuple]:
        return [
            self.upper.column(i)
            for i, s in enumerate(self.upper_basis)
            if self.filt.birth[s] <= t
        ]


def _homology_basis(field: Field, cycles: Sequence[tuple], boundaries: Sequence[tuple]) -> list[tuple]:
    chosen: list[tuple] = []
    for z in cycles:
        if not in_span(field, list(boundaries) + chosen, z):
            chosen.append(z)
    return chosen


def from_filtration(filt: Filtration, n: int, field: Field) -> FiniteTypePersMod:
    """``H_n(K_•; field)`` with structure maps in echelon-chosen homology bases."""
    if not isinstance(field, Field):
        raise RingMismatchError(f"persistence modules need a field, not {field.label}")
    horizon = filt.horizon
    spaces = _ChainSpaces(filt, n, field)
    nvec = len(spaces.basis)
    bases = []
    bounds = []
    for t in range(horizon + 1):
        b = spaces.boundaries(t)
        bounds.append(b)
        bases.append(_homology_basis(field, spaces.cycles(t), b))

    maps = []
    for t in range(horizon):
        target = bounds[t + 1] + bases[t + 1]
        nb = len(bounds[t + 1])
        arr = np.empty((len(bases[t + 1]), len(bases[t])), dtype=object)
        arr.fill(field.zero())
        for col, h in enumerate(bases[t]):
            x = solve(Matrix.from_columns(field, target, nvec), h)
            if x is None:
                raise ValueError(f"cycle of K_{t} is not a cycle of K_{t + 1}")
            for row, c in enumerate(x[nb:]):
                arr[row, col] = c
        maps.append(Matrix(field, arr))
    dims = tuple(len(b) for b in bases)
    _logger.debug("oracle H_%d over %s: dims %s", n, field.label, dims)
    return FiniteTypePersMod(field, horizon, dims, tuple(maps))


def inclusion_rank(filt: Filtration, n: int, field: Field, t: int, s: int) -> int:
    """``rank(H_n(K_t) → H_n(K_s)) = rank[Z_t | B_s] - rank(B_s)``."""
    if not 0 <= t <= s:
        raise ValueError(f"need 0 <= t <= s, got t={t}, s={s}")
    spaces = _ChainSpaces(filt, n, field)
    nvec = len(spaces.basis)
    z_t = spaces.cycles(t)
    b_s = spaces.boundaries(s)
    if not z_t:
        return 0
    rank_b = rank(Matrix.from_columns(field, b_s, nvec)) if b_s else 0
    return rank(Matrix.from_columns(field, b_s + z_t, nvec)) - rank_b


def check_interval_decomposition(
    m: FiniteTypePersMod, intervals: Iterable[Interval]
) -> bool:
    """True iff *intervals* has the rank profile of *m*.

    Every ``t ≤ s ≤ T`` is compared; finite intervals ending after the horizon
    and infinite ones starting after it cannot describe a module that is
    constant from T on and make the check fail.
    """
    bars = list(intervals)
    for j in bars:
        if (j.death is not None and j.death > m.horizon) or j.birth > m.horizon:
            _logger.debug("interval %s does not fit horizon %d", j, m.horizon)
            return False
    for (t, s), r in rank_table(m).items():
        expected = sum(1 for j in bars if j.covers(t, s))
        if r != expected:
            _logger.debug("rank(V_%d -> V_%d) = %d but %d intervals cover it", t, s, r, expected)
            return False
    return True
