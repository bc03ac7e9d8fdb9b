"""
Unit tests — filtrations and graded boundary matrices.

* Construction from events: closure, monotonicity, duplicate births in strict
  and lenient mode, invalid times.
* K_t snapshots, the constant tail after the horizon, graded bases ordered by
  birth and the graded boundary matrices of the square filtration.
* Random filtrations are valid and their graded matrices specialise to the
  ordinary boundary matrices up to the basis order.
"""

from __future__ import annotations

import logging

import pytest
from numpy.random import RandomState

from snfpers.catalog import SQUARE_EVENTS, square_filtration
from snfpers.errors import ClosureError, DuplicateSimplexError, MonotonicityError, RingMismatchError
from snfpers.filtration import Filtration, complex_at, from_events, graded_boundary_matrix
from snfpers.random_inputs import random_filtration
from snfpers.rings import IntegerRing, RationalField
from snfpers.simplicial import Simplex, boundary_matrix, standard_basis

Q = RationalField()


def _names(simplices) -> set[str]:
    return {"".join(s.vertices) for s in simplices}


def test_square_filtration_is_valid() -> None:
    filt = square_filtration()
    assert filt.horizon == 5
    assert filt.dim == 2
    assert len(filt) == len(SQUARE_EVENTS)


_SNAPSHOTS = [
    (0, {"a", "b"}),
    (1, {"a", "b", "c", "d", "ab", "bc"}),
    (2, {"a", "b", "c", "d", "ab", "bc", "ad", "cd"}),
    (99, {"a", "b", "c", "d", "ab", "bc", "ad", "cd", "ac", "abc", "acd"}),
]


@pytest.mark.parametrize("t,expected", _SNAPSHOTS)
def test_complex_at(t: int, expected: set[str]) -> None:
    assert _names(complex_at(square_filtration(), t).simplices) == expected


def test_tail_is_the_whole_complex() -> None:
    filt = square_filtration()
    assert filt.complex_at(5) is filt.complex
    assert filt.complex_at(1000) is filt.complex


def test_simplices_at() -> None:
    filt = square_filtration()
    assert [str(s) for s in filt.simplices_at(2, 1)] == ["a b", "a d", "b c", "c d"]
    assert filt.simplices_at(0, 1) == []


def test_graded_bases_order_by_birth() -> None:
    filt = square_filtration()
    b0 = filt.graded_basis(0)
    b1 = filt.graded_basis(1)
    assert [str(s) for s in b0.simplices] == ["a", "b", "c", "d"]
    assert b0.degrees == (0, 0, 1, 1)
    assert [str(s) for s in b1.simplices] == ["a b", "b c", "a d", "c d", "a c"]
    assert b1.degrees == (1, 1, 2, 2, 3)
    assert filt.graded_basis(3).entries == ()


def test_first_graded_boundary_matrix() -> None:
    g = graded_boundary_matrix(square_filtration(), 1, Q)
    expected = [
        ["-x", "0", "-x^2", "0", "-x^3"],
        ["x", "-x", "0", "0", "0"],
        ["0", "1", "0", "-x", "x^2"],
        ["0", "0", "x", "x", "0"],
    ]
    assert g.base.format_rows() == expected


def test_second_graded_boundary_matrix() -> None:
    g = graded_boundary_matrix(square_filtration(), 2, Q)
    assert g.row_degrees == (1, 1, 2, 2, 3)
    assert g.col_degrees == (4, 5)
    assert g.base.format_rows() == [
        ["x^3", "0"],
        ["x^3", "0"],
        ["0", "-x^3"],
        ["0", "x^3"],
        ["-x", "x^2"],
    ]


def test_zeroth_graded_boundary_matrix_is_empty() -> None:
    assert graded_boundary_matrix(square_filtration(), 0, Q).shape == (0, 4)


def test_graded_boundary_needs_a_field() -> None:
    with pytest.raises(RingMismatchError):
        square_filtration().graded_boundary_matrix(1, IntegerRing())


def test_chain_vector() -> None:
    filt = square_filtration()
    ab, bc = Simplex(("a", "b")), Simplex(("b", "c"))
    assert filt.chain_vector({ab: 1, bc: -2}, 1, Q, t=1) == (1, -2)
    with pytest.raises(ValueError, match="K_1"):
        filt.chain_vector({Simplex(("a", "c")): 1}, 1, Q, t=1)


# ---------------------------------------------------------------------------
# Invalid input
# ---------------------------------------------------------------------------

def test_face_never_born() -> None:
    with pytest.raises(ClosureError):
        from_events([(0, "ab")])


def test_face_born_late() -> None:
    with pytest.raises(MonotonicityError, match=r"\[b\]"):
        from_events([(0, "a"), (2, "b"), (1, "ab")])


def test_duplicate_strict() -> None:
    events = [(0, "a"), (0, "b"), (0, "ab"), (1, "a")]
    with pytest.raises(DuplicateSimplexError):
        from_events(events, strict=True)


def test_duplicate_lenient_keeps_earliest(caplog: pytest.LogCaptureFixture) -> None:
    events = [(0, "a"), (0, "b"), (0, "ab"), (1, "a")]
    with caplog.at_level(logging.WARNING, logger="snfpers.filtration"):
        filt = from_events(events, strict=False)
    assert filt.birth[Simplex(("a",))] == 0
    assert "keeping 0" in caplog.text


def test_repeated_identical_event_is_fine() -> None:
    filt = from_events([(0, "a"), (0, "a")])
    assert len(filt) == 1


@pytest.mark.parametrize("t", [-1, 1.5, "0", True])
def test_bad_birth_time(t) -> None:
    with pytest.raises(ValueError):
        from_events([(t, "a")])


def test_vertex_order_is_permutation_invariant() -> None:
    filt = from_events([(0, "b"), (0, "a"), (1, "ba")])
    assert Simplex(("a", "b")) in filt.birth


def test_empty_filtration() -> None:
    filt = Filtration.from_events([])
    assert filt.horizon == 0
    assert filt.dim == -1
    assert len(filt) == 0


# ---------------------------------------------------------------------------
# Random filtrations
# ---------------------------------------------------------------------------

def test_random_filtrations_are_monotone() -> None:
    for seed in range(100):
        filt = random_filtration(RandomState(seed))
        assert 1 <= len(filt) <= 15
        assert filt.dim <= 3
        for s, t in filt.birth.items():
            assert all(filt.birth[f] <= t for _, f in s.facets()), f"seed={seed}"


def test_graded_matrix_specialises_to_boundary_matrix() -> None:
    for seed in range(50):
        filt = random_filtration(RandomState(seed))
        for n in range(1, filt.dim + 1):
            g = filt.graded_boundary_matrix(n, Q)
            plain = boundary_matrix(filt.complex, n, Q)
            rows = [standard_basis(filt.complex, n - 1).index(s) for s in filt.graded_basis(n - 1).simplices]
            cols = [standard_basis(filt.complex, n).index(s) for s in filt.graded_basis(n).simplices]
            assert g.specialize() == plain.submatrix(rows, cols), f"seed={seed} n={n}"
