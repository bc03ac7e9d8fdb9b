"""
Abstract simplicial complexes, chain bases, boundary matrices and homology.

A complex is a face-closed finite set of simplices together with an
orientation, a total order on its vertices.  Every :class:`Simplex` stores its
vertices ascending in that order, so the boundary formula

    ∂[v_0, …, v_n] = Σ (-1)^i [v_0, …, v̂_i, …, v_n]

never needs a sign correction: removing a vertex keeps the tuple ascending.

Homology over a Euclidean ring comes from two Smith forms::

    H_n ≅ R^f ⊕ R/(d_1) ⊕ … ⊕ R/(d_k)

where the d's are the non-unit diagonal entries of the SNF of ∂_{n+1} and
``f = dim ker ∂_n - rank ∂_{n+1}``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from snfpers.errors import ClosureError, UnknownVertexError
from snfpers.matrices import Matrix, snd
from snfpers.rings import EuclideanRing

_logger = logging.getLogger(__name__)

Vertex = str


def check_vertex(token: Any) -> Vertex:
    if not isinstance(token, str) or not token or any(ch.isspace() for ch in token):
        raise ValueError(f"vertex names must be non-empty strings without whitespace, got {token!r}")
    return token


# ---------------------------------------------------------------------------
# Orientation and simplices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Simplex:
    """Oriented simplex; ``vertices`` is ascending in the complex's orientation."""

    vertices: tuple[Vertex, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def facets(self) -> list[tuple[int, Simplex]]:
        """``(sign, facet)`` for the facet omitting vertex i, sign ``(-1)^i``."""
        if self.dim == 0:
            return []
        return [
            (-1 if i % 2 else 1, Simplex(self.vertices[:i] + self.vertices[i + 1:]))
            for i in range(len(self.vertices))
        ]

    def __str__(self) -> str:
        return " ".join(self.vertices)


@dataclass(frozen=True)
class Orientation:
    """A total order on the vertex set."""

    order: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(check_vertex(v) for v in self.order))
        if len(set(self.order)) != len(self.order):
            raise ValueError(f"orientation lists a vertex twice: {' '.join(self.order)}")

    @cached_property
    def _position(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.order)}

    def position(self, v: Vertex) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise UnknownVertexError(f"vertex {v!r} is not in the orientation") from None

    def key(self, s: Simplex) -> tuple[int, ...]:
        """Lexicographic sort key of a simplex in this orientation."""
        return tuple(self.position(v) for v in s.vertices)

    def orient(self, vertices: Iterable[Vertex]) -> tuple[int, Simplex]:
        """Sort *vertices* ascending and return the parity of the sorting permutation.

        ``[v_0, …, v_n] = sign · [sorted]`` in the chain group.
        """
        vs = [check_vertex(v) for v in vertices]
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"simplex lists a vertex twice: {' '.join(vs)}")
        pos = [self.position(v) for v in vs]
        inversions = sum(
            1 for i in range(len(pos)) for j in range(i + 1, len(pos)) if pos[i] > pos[j]
        )
        ordered = tuple(v for _, v in sorted(zip(pos, vs)))
        return (-1 if inversions % 2 else 1), Simplex(ordered)

    def canonical(self, vertices: Iterable[Vertex]) -> Simplex:
        return self.orient(vertices)[1]


def orient(vertices: Iterable[Vertex], orientation: Orientation) -> tuple[int, Simplex]:
    return orientation.orient(vertices)


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A validated, face-closed complex.  Build it with :func:`validate_complex`."""

    simplices: frozenset[Simplex]
    orientation: Orientation

    @cached_property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((s.dim for s in self.simplices), default=-1)

    @cached_property
    def _by_dim(self) -> dict[int, list[Simplex]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(s.dim, []).append(s)
        for group in out.values():
            group.sort(key=self.orientation.key)
        return out

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.orientation.order

    def count(self, n: int) -> int:
        return len(self._by_dim.get(n, ()))

    def __contains__(self, s: object) -> bool:
        return s in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def subcomplex(self, simplices: Iterable[Simplex]) -> SimplicialComplex:
        """Face-closed subset of this complex, oriented by the vertices it keeps."""
        kept = frozenset(simplices)
        present = {s.vertices[0] for s in kept if s.dim == 0}
        order = tuple(v for v in self.orientation.order if v in present)
        return SimplicialComplex(kept, Orientation(order))


def validate_complex(
    simplices: Iterable[Iterable[Vertex] | Simplex],
    orientation: Orientation | Sequence[Vertex] | None = None,
    auto_close: bool = False,
) -> SimplicialComplex:
    """Check face-closure and build a :class:`SimplicialComplex`.

    Without an orientation the vertices are ordered lexicographically by name.
    Orientation entries that name no vertex of the complex are dropped.  With
    ``auto_close=True`` missing faces are inserted instead of raising
    :class:`~snfpers.errors.ClosureError`.
    """
    raw = [tuple(s.vertices) if isinstance(s, Simplex) else tuple(s) for s in simplices]
    if orientation is None:
        orientation = Orientation(tuple(sorted({v for s in raw for v in s})))
    elif not isinstance(orientation, Orientation):
        orientation = Orientation(tuple(orientation))

    members: set[Simplex] = {orientation.canonical(s) for s in raw}
    pending = sorted(members, key=lambda s: (-s.dim, orientation.key(s)))
    while pending:
        s = pending.pop()
        missing = [f for _, f in s.facets() if f not in members]
        if not missing:
            continue
        if not auto_close:
            names = ", ".join(str(f) for f in missing)
            raise ClosureError(f"simplex [{s}] is missing its face(s) {names}")
        for f in missing:
            members.add(f)
            pending.append(f)

    present = {s.vertices[0] for s in members if s.dim == 0}
    order = tuple(v for v in orientation.order if v in present)
    return SimplicialComplex(frozenset(members), Orientation(order))


def standard_basis(k: SimplicialComplex, n: int) -> list[Simplex]:
    """The n-simplices of *k* in lexicographic orientation order."""
    return list(k._by_dim.get(n, ()))


def boundary_matrix(k: SimplicialComplex, n: int, ring: EuclideanRing) -> Matrix:
    """Matrix of ∂_n in the standard bases of C_n (columns) and C_{n-1} (rows)."""
    cols = standard_basis(k, n)
    rows = standard_basis(k, n - 1)
    index = {s: j for j, s in enumerate(rows)}
    arr = np.empty((len(rows), len(cols)), dtype=object)
    arr.fill(ring.zero())
    for i, s in enumerate(cols):
        for sign, facet in s.facets():
            arr[index[facet], i] = ring.coerce(sign)
    return Matrix(ring, arr)


# ---------------------------------------------------------------------------
# Chains
# ---------------------------------------------------------------------------

Chain = dict[Simplex, Any]
ChainTerm = tuple[Any, Simplex | Iterable[Vertex]]


def chain_from_terms(
    terms: Iterable[ChainTerm], orientation: Orientation, ring: EuclideanRing
) -> Chain:
    """Collect ``(coefficient, vertices)`` pairs into a chain.

    Vertex tuples in any order are accepted; the parity of the sorting
    permutation is folded into the coefficient.  Zero coefficients vanish.
    """
    chain: Chain = {}
    for coef, vs in terms:
        vertices = vs.vertices if isinstance(vs, Simplex) else tuple(vs)
        sign, s = orientation.orient(vertices)
        chain[s] = chain.get(s, ring.zero()) + ring.coerce(coef) * ring.coerce(sign)
    return {s: c for s, c in chain.items() if c}


def chain_boundary(chain: Mapping[Simplex, Any], ring: EuclideanRing) -> Chain:
    out: Chain = {}
    for s, c in chain.items():
        for sign, facet in s.facets():
            out[facet] = out.get(facet, ring.zero()) + c * ring.coerce(sign)
    return {s: c for s, c in out.items() if c}


# ---------------------------------------------------------------------------
# Homology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyDecomposition:
    """``H_n ≅ R^free_rank ⊕ R/(d_1) ⊕ … ⊕ R/(d_k)``."""

    dim: int
    free_rank: int
    invariant_factors: tuple[Any, ...] = ()

    def describe(self, ring: EuclideanRing) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append(ring.label)
        elif self.free_rank > 1:
            parts.append(f"{ring.label}^{self.free_rank}")
        parts.extend(f"{ring.label}/({ring.format(d)})" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def homology(k: SimplicialComplex, n: int, ring: EuclideanRing) -> HomologyDecomposition:
    """H_n(K; R) from the Smith forms of ∂_n and ∂_{n+1}."""
    if n < 0 or n > k.dim:
        return HomologyDecomposition(n, 0)
    upper = snd(boundary_matrix(k, n + 1, ring))
    lower = snd(boundary_matrix(k, n, ring))
    kernel_rank = k.count(n) - lower.rank
    factors = tuple(d for d in upper.diagonal if not ring.is_unit(d))
    result = HomologyDecomposition(n, kernel_rank - upper.rank, factors)
    _logger.debug(
        "H_%d over %s: dim ker %d, rank im %d -> %s",
        n, ring.label, kernel_rank, upper.rank, result.describe(ring),
    )
    return result


def homology_all(k: SimplicialComplex, ring: EuclideanRing) -> list[HomologyDecomposition]:
    return [homology(k, n, ring) for n in range(k.dim + 1)]


def betti_numbers(k: SimplicialComplex, ring: EuclideanRing) -> tuple[int, ...]:
    """Free ranks of H_0 … H_dim (Betti numbers when *ring* is a field)."""
    return tuple(h.free_rank for h in homology_all(k, ring))


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** n * k.count(n) for n in range(k.dim + 1))
