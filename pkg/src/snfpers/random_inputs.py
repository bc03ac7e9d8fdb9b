"""
Seeded random matrices, elementary operations and filtrations.

Every generator draws only from the ``numpy.random.RandomState`` it is given,
never from global state, so ``RandomState(seed)`` reproduces an input exactly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any

from snfpers.filtration import Filtration
from snfpers.matrices import (
    Dilate,
    ElementaryOp,
    GradedMatrix,
    Matrix,
    Side,
    Swap,
    Transvect,
)
from snfpers.rings import EuclideanRing, Field, IntegerRing, PolynomialRing


def uniform_int(rng, low_inclusive: int, high_inclusive: int) -> int:
    """Uniform integer in ``[low_inclusive, high_inclusive]``."""
    return int(rng.randint(low_inclusive, high_inclusive + 1))


def random_element(rng, ring: EuclideanRing, low: int = -9, high: int = 9) -> Any:
    """Random element; polynomial rings get random coefficients up to degree 2."""
    if isinstance(ring, PolynomialRing):
        return ring.from_terms({d: uniform_int(rng, low, high) for d in range(3)})
    return ring.coerce(uniform_int(rng, low, high))


def random_unit(rng, ring: EuclideanRing) -> Any:
    if isinstance(ring, IntegerRing):
        return 1 if rng.randint(2) else -1
    field = ring.field if isinstance(ring, PolynomialRing) else ring
    while True:
        c = field.coerce(uniform_int(rng, -9, 9))
        if c:
            return ring.coerce(c) if isinstance(ring, PolynomialRing) else c


def random_matrix(
    rng,
    ring: EuclideanRing | None = None,
    max_rows: int = 6,
    max_cols: int = 6,
    low: int = -9,
    high: int = 9,
) -> Matrix:
    ring = ring or IntegerRing()
    m = uniform_int(rng, 1, max_rows)
    n = uniform_int(rng, 1, max_cols)
    return Matrix.from_rows(
        ring, [[random_element(rng, ring, low, high) for _ in range(n)] for _ in range(m)]
    )


def random_graded_matrix(
    rng,
    field: Field,
    max_rows: int = 6,
    max_cols: int = 6,
    max_degree: int = 5,
    density: float = 0.6,
) -> GradedMatrix:
    """Random matrix satisfying the graded entry-degree rule over ``field[x]``."""
    ring = PolynomialRing(field)
    m = uniform_int(rng, 1, max_rows)
    n = uniform_int(rng, 1, max_cols)
    row_degrees = [uniform_int(rng, 0, max_degree) for _ in range(m)]
    col_degrees = [uniform_int(rng, 0, max_degree) for _ in range(n)]
    rows = []
    for rd in row_degrees:
        row = []
        for cd in col_degrees:
            if cd >= rd and rng.random_sample() < density:
                row.append(ring.monomial(random_unit(rng, field), cd - rd))
            else:
                row.append(ring.zero())
        rows.append(row)
    return GradedMatrix.from_rows(ring, rows, row_degrees, col_degrees)


def random_elementary_op(rng, ring: EuclideanRing, size: int, side: Side) -> ElementaryOp:
    """Random Swap, Dilate or Transvect acting on lines ``0 … size-1``."""
    kind = rng.randint(3) if size > 1 else 1
    if kind == 0:
        k1, k2 = (int(k) for k in rng.choice(size, 2, replace=False))
        return ElementaryOp(Swap(k1, k2), side)
    if kind == 1:
        return ElementaryOp(Dilate(uniform_int(rng, 0, size - 1), random_unit(rng, ring)), side)
    target, source = (int(k) for k in rng.choice(size, 2, replace=False))
    return ElementaryOp(Transvect(target, source, random_element(rng, ring, -3, 3)), side)


def random_filtration(
    rng,
    max_simplices: int = 15,
    max_dim: int = 3,
    horizon: int = 6,
    max_vertices: int = 6,
) -> Filtration:
    """Random face-closed complex with monotone random births in ``0 … horizon``."""
    nv = uniform_int(rng, 1, max_vertices)
    vertices = [f"v{i}" for i in range(nv)]
    chosen: set[tuple[str, ...]] = set()
    for _ in range(4 * max_simplices):
        size = uniform_int(rng, 1, min(nv, max_dim + 1))
        picked = sorted(int(i) for i in rng.choice(nv, size, replace=False))
        top = tuple(vertices[i] for i in picked)
        faces = {f for k in range(1, size + 1) for f in combinations(top, k)}
        if len(chosen | faces) <= max_simplices:
            chosen |= faces
    birth: dict[tuple[str, ...], int] = {}
    for s in sorted(chosen, key=len):
        floor = max((birth[f] for f in combinations(s, len(s) - 1) if f), default=0)
        birth[s] = uniform_int(rng, floor, max(floor, horizon))
    return Filtration.from_events(((t, s) for s, t in birth.items()), orientation=vertices)
