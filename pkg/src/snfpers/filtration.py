"""
ℕ-indexed simplicial filtrations.

A filtration assigns every simplex of a finite complex a birth time so that
faces are never born after their cofaces; ``K_t`` is the subcomplex of all
simplices born at or before ``t``.  It is constant from the horizon
``T = max birth`` on.

The graded chain module ``C_n^gr`` has one homogeneous basis element
``σ·x^{birth(σ)}`` per n-simplex.  Its standard basis is ordered by birth, then
lexicographically, and :meth:`Filtration.graded_boundary_matrix` writes ∂_n^gr
in those bases: the entry for facet τ of σ is ``±x^{birth(σ) - birth(τ)}``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from snfpers.errors import DuplicateSimplexError, MonotonicityError, RingMismatchError
from snfpers.matrices import GradedMatrix, Matrix
from snfpers.rings import Field, PolynomialRing
from snfpers.simplicial import (
    Orientation,
    Simplex,
    SimplicialComplex,
    Vertex,
    standard_basis,
    validate_complex,
)

_logger = logging.getLogger(__name__)

Event = tuple[int, Iterable[Vertex] | Simplex]


def _check_time(t: Any) -> int:
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise ValueError(f"birth times must be natural numbers, got {t!r}")
    return t


@dataclass(frozen=True)
class GradedChainBasis:
    """Homogeneous basis ``σ_i·x^{t_i}`` of the graded chain module in one dimension."""

    dim: int
    entries: tuple[tuple[Simplex, int], ...]

    @property
    def simplices(self) -> tuple[Simplex, ...]:
        return tuple(s for s, _ in self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True, eq=False)
class Filtration:
    """A simplicial complex with a monotone birth map.  Build with :meth:`from_events`."""

    complex: SimplicialComplex
    birth: Mapping[Simplex, int]

    @classmethod
    def from_events(
        cls,
        events: Iterable[Event],
        orientation: Orientation | Sequence[Vertex] | None = None,
        strict: bool = True,
    ) -> Filtration:
        """Assemble a filtration from ``(birth, simplex)`` events.

        A simplex listed twice with different births raises
        :class:`~snfpers.errors.DuplicateSimplexError` when *strict*; otherwise
        the earliest birth is kept and a warning is logged.
        """
        raw: list[tuple[int, tuple[Vertex, ...]]] = []
        for t, vs in events:
            vertices = vs.vertices if isinstance(vs, Simplex) else tuple(vs)
            raw.append((_check_time(t), vertices))
        if orientation is None:
            orientation = Orientation(tuple(sorted({v for _, s in raw for v in s})))
        elif not isinstance(orientation, Orientation):
            orientation = Orientation(tuple(orientation))

        birth: dict[Simplex, int] = {}
        for t, vertices in raw:
            s = orientation.canonical(vertices)
            previous = birth.get(s)
            if previous is None or previous == t:
                birth[s] = t
                continue
            if strict:
                raise DuplicateSimplexError(
                    f"simplex [{s}] is given births {previous} and {t}"
                )
            _logger.warning(
                "simplex [%s] given births %d and %d; keeping %d",
                s, previous, t, min(previous, t),
            )
            birth[s] = min(previous, t)

        complex_ = validate_complex(birth, orientation)
        for s, t in birth.items():
            for _, face in s.facets():
                if birth[face] > t:
                    raise MonotonicityError(
                        f"face [{face}] is born at {birth[face]}, after its coface [{s}] at {t}"
                    )
        filt = cls(complex_, birth)
        _logger.debug(
            "filtration with %d simplices, dim %d, horizon %d",
            len(birth), complex_.dim, filt.horizon,
        )
        return filt

    # -- structure -----------------------------------------------------------

    @cached_property
    def horizon(self) -> int:
        """Largest birth time (0 for the empty filtration)."""
        return max(self.birth.values(), default=0)

    @property
    def dim(self) -> int:
        return self.complex.dim

    def __len__(self) -> int:
        return len(self.birth)

    def complex_at(self, t: int) -> SimplicialComplex:
        """``K_t``; for ``t ≥ T`` this is the whole complex."""
        _check_time(t)
        if t >= self.horizon:
            return self.complex
        return self.complex.subcomplex(s for s, b in self.birth.items() if b <= t)

    def simplices_at(self, t: int, n: int) -> list[Simplex]:
        """Standard basis of ``C_n(K_t)``."""
        return [s for s in standard_basis(self.complex, n) if self.birth[s] <= _check_time(t)]

    def graded_basis(self, n: int) -> GradedChainBasis:
        key = self.complex.orientation.key
        ordered = sorted(
            standard_basis(self.complex, n), key=lambda s: (self.birth[s], key(s))
        )
        return GradedChainBasis(n, tuple((s, self.birth[s]) for s in ordered))

    def graded_boundary_matrix(self, n: int, field: Field) -> GradedMatrix:
        """``[∂_n^gr]`` over ``field[x]`` in the standard graded bases."""
        if not isinstance(field, Field):
            raise RingMismatchError(f"graded boundary matrices need a field, not {field.label}")
        ring = PolynomialRing(field)
        cols = self.graded_basis(n)
        rows = self.graded_basis(n - 1)
        index = {s: j for j, s in enumerate(rows.simplices)}
        arr = np.empty((len(rows), len(cols)), dtype=object)
        arr.fill(ring.zero())
        for i, (s, t) in enumerate(cols.entries):
            for sign, face in s.facets():
                j = index[face]
                arr[j, i] = ring.monomial(sign, t - rows.degrees[j])
        return GradedMatrix(Matrix(ring, arr), rows.degrees, cols.degrees)

    def chain_vector(
        self, chain: Mapping[Simplex, Any], n: int, field: Field, t: int | None = None
    ) -> tuple[Any, ...]:
        """Coordinates of *chain* in the standard basis of ``C_n(K_t)`` (default ``K_T``)."""
        t = self.horizon if t is None else t
        basis = self.simplices_at(t, n)
        index = {s: i for i, s in enumerate(basis)}
        coords = [field.zero()] * len(basis)
        for s, c in chain.items():
            if s not in index:
                raise ValueError(f"simplex [{s}] is not an {n}-simplex of K_{t}")
            coords[index[s]] = coords[index[s]] + field.coerce(c)
        return tuple(coords)


def from_events(
    events: Iterable[Event],
    orientation: Orientation | Sequence[Vertex] | None = None,
    strict: bool = True,
) -> Filtration:
    return Filtration.from_events(events, orientation=orientation, strict=strict)


def complex_at(filt: Filtration, t: int) -> SimplicialComplex:
    return filt.complex_at(t)


def graded_boundary_matrix(filt: Filtration, n: int, field: Field) -> GradedMatrix:
    return filt.graded_boundary_matrix(n, field)
