"""
Small named complexes and filtrations with known homology.

Used by the demo script and as golden inputs in the test-suite.
"""

from __future__ import annotations

from collections.abc import Callable

from snfpers.filtration import Filtration
from snfpers.simplicial import SimplicialComplex, validate_complex

#: Square abcd filled in by its diagonal ac; H_0 bars [0,∞) [0,1) [1,2) and H_1 bars [2,5) [3,4).
SQUARE_EVENTS: tuple[tuple[int, str], ...] = (
    (0, "a"),
    (0, "b"),
    (1, "c"),
    (1, "d"),
    (1, "ab"),
    (1, "bc"),
    (2, "ad"),
    (2, "cd"),
    (3, "ac"),
    (4, "abc"),
    (5, "acd"),
)


def square_filtration() -> Filtration:
    return Filtration.from_events((t, tuple(s)) for t, s in SQUARE_EVENTS)


def two_triangles() -> SimplicialComplex:
    """All six edges on a, b, c, d with the triangles acd and bcd (H_1 ≅ ℤ)."""
    return validate_complex(
        [("a", "c", "d"), ("b", "c", "d"), ("a", "b")],
        orientation=("a", "b", "c", "d"),
        auto_close=True,
    )


def six_vertex_complex() -> SimplicialComplex:
    """Two components: the edge a1a2 and a triangle boundary a4a5a6 with a whisker a3a4."""
    vertices = [f"a{i}" for i in range(1, 7)]
    edges = [("a1", "a2"), ("a3", "a4"), ("a4", "a5"), ("a4", "a6"), ("a5", "a6")]
    return validate_complex(edges, orientation=vertices, auto_close=True)


def torus() -> SimplicialComplex:
    """Nine-vertex torus: a 3×3 grid of squares, each cut along a diagonal.

    Rows are the vertex families a, b, c and columns are indices mod 3; both
    directions wrap around.
    """
    rows = "abc"
    triangles = []
    for r in range(3):
        top, bottom = rows[r], rows[(r + 1) % 3]
        for i in range(3):
            j = (i + 1) % 3
            triangles.append((f"{top}{i}", f"{top}{j}", f"{bottom}{j}"))
            triangles.append((f"{top}{i}", f"{bottom}{i}", f"{bottom}{j}"))
    order = [f"{x}{i}" for x in rows for i in range(3)]
    return validate_complex(triangles, orientation=order, auto_close=True)


def projective_plane() -> SimplicialComplex:
    """Six-vertex real projective plane (H_1 ≅ ℤ/2 over ℤ)."""
    triangles = [
        "123", "134", "145", "156", "126",
        "235", "245", "246", "346", "356",
    ]
    return validate_complex([tuple(t) for t in triangles], auto_close=True)


COMPLEXES: dict[str, Callable[[], SimplicialComplex]] = {
    "two-triangles": two_triangles,
    "six-vertex": six_vertex_complex,
    "torus": torus,
    "projective-plane": projective_plane,
}

FILTRATIONS: dict[str, Callable[[], Filtration]] = {
    "square": square_filtration,
}
