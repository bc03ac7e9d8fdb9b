"""
Unit tests — barcodes from the graded SND.

* Square filtration goldens: intervals over ℚ, ℤ_2, ℤ_3 and ℤ_5, graded
  invariant factor summands and cycle representatives over ℚ.
* Betti queries: betti_at, p_persistent_betti, persistence_pairs.
* The two essential-birth procedures agree and reject inconsistent input.
* check_barcode accepts computed barcodes and rejects tampered ones.
* Small hand-computed filtrations and the empty filtration.
"""

from __future__ import annotations

from dataclasses import replace

import pytest
from numpy.random import RandomState

from snfpers.barcode import (
    Bar,
    Barcode,
    Free,
    Interval,
    Torsion,
    barcode,
    betti_at,
    check_barcode,
    essential_births_by_difference,
    essential_births_by_membership,
    graded_ifd,
    is_boundary_at,
    is_cycle_at,
    p_persistent_betti,
    persistence_pairs,
    persistent_homology,
)
from snfpers.catalog import square_filtration
from snfpers.errors import InvariantViolation, RingMismatchError
from snfpers.filtration import from_events
from snfpers.formats import format_chain
from snfpers.random_inputs import random_filtration
from snfpers.rings import IntegerRing, PrimeField, RationalField

Q = RationalField()

_SQUARE_BARS = {
    0: [Interval(0, 1), Interval(0, None), Interval(1, 2)],
    1: [Interval(2, 5), Interval(3, 4)],
    2: [],
}


def _q_barcode() -> Barcode:
    return barcode(square_filtration(), Q)


@pytest.mark.parametrize("field", [Q, PrimeField(2), PrimeField(3), PrimeField(5)])
def test_square_intervals(field) -> None:
    bc = barcode(square_filtration(), field, max_dim=2)
    for n, expected in _SQUARE_BARS.items():
        assert bc.intervals(n) == expected
    assert bc.counts() == {0: 3, 1: 2, 2: 0}


_SUMMANDS = [
    (0, {Free(0), Torsion(0, 1), Torsion(1, 1)}),
    (1, {Torsion(2, 3), Torsion(3, 1)}),
    (2, set()),
]


@pytest.mark.parametrize("n,expected", _SUMMANDS)
def test_graded_ifd(n: int, expected: set) -> None:
    summands = graded_ifd(square_filtration(), n, Q)
    assert len(summands) == len(expected)
    assert set(summands) == expected


# (dim, interval, representative as text)
_REPRESENTATIVES = [
    (0, Interval(0, None), "[a]"),
    (0, Interval(0, 1), "-[a] + [b]"),
    (0, Interval(1, 2), "-[a] + [d]"),
    (1, Interval(2, 5), "[a b] + [b c] - [a d] + [c d]"),
    (1, Interval(3, 4), "-[a b] - [b c] + [a c]"),
]


@pytest.mark.parametrize("dim,interval,text", _REPRESENTATIVES)
def test_square_representatives(dim: int, interval: Interval, text: str) -> None:
    bars = [b for b in _q_barcode().in_dim(dim) if b.interval == interval]
    assert len(bars) == 1
    rep = bars[0].representative
    assert format_chain(rep, Q) == text
    assert rep.degree == interval.birth


def test_bar_order_is_deterministic() -> None:
    bc = _q_barcode()
    assert [(b.dim, str(b.interval)) for b in bc.bars] == [
        (0, "[0, 1)"),
        (0, "[0, inf)"),
        (0, "[1, 2)"),
        (1, "[2, 5)"),
        (1, "[3, 4)"),
    ]
    assert barcode(square_filtration(), Q) == bc


def test_representatives_are_cycles_and_boundaries_at_death() -> None:
    filt = square_filtration()
    rep = [b for b in _q_barcode().in_dim(1) if b.interval == Interval(2, 5)][0]
    chain = rep.representative.as_dict()
    assert is_cycle_at(filt, 1, chain, 2, Q)
    assert not is_cycle_at(filt, 1, chain, 1, Q)
    assert not is_boundary_at(filt, 1, chain, 4, Q)
    assert is_boundary_at(filt, 1, chain, 5, Q)


# ---------------------------------------------------------------------------
# Betti queries
# ---------------------------------------------------------------------------

_BETTI_AT = [
    (0, 0, 2),
    (0, 1, 2),
    (0, 2, 1),
    (1, 2, 1),
    (1, 3, 2),
    (1, 4, 1),
    (1, 5, 0),
]


@pytest.mark.parametrize("dim,t,expected", _BETTI_AT)
def test_betti_at(dim: int, t: int, expected: int) -> None:
    assert betti_at(_q_barcode().in_dim(dim), t) == expected


_P_PERSISTENT = [
    # H_0(K_0) -> H_0(K_1): a and b are joined by ab at t = 1
    (0, 0, 1, 1),
    (0, 1, 3, 1),
    (0, 1, 0, 2),
    (1, 2, 2, 1),
    (1, 3, 1, 1),
    (1, 3, 0, 2),
    (1, 0, 9, 0),
]


@pytest.mark.parametrize("dim,t,p,expected", _P_PERSISTENT)
def test_p_persistent_betti(dim: int, t: int, p: int, expected: int) -> None:
    assert p_persistent_betti(_q_barcode().in_dim(dim), t, p) == expected


def test_zero_persistence_is_betti_at() -> None:
    bars = _q_barcode().bars
    for n in range(2):
        dim_bars = [b for b in bars if b.dim == n]
        for t in range(7):
            assert p_persistent_betti(dim_bars, t, 0) == betti_at(dim_bars, t)


def test_no_bars_alive_after_all_deaths() -> None:
    bars = [Interval(0, 2), Interval(1, 3)]
    assert betti_at(bars, 3) == 0
    assert betti_at(bars, 100) == 0


def test_negative_queries_rejected() -> None:
    with pytest.raises(ValueError):
        p_persistent_betti([], -1, 0)
    with pytest.raises(ValueError):
        p_persistent_betti([], 0, -1)


def test_persistence_pairs() -> None:
    pairs, essential = persistence_pairs(_q_barcode().in_dim(0))
    assert pairs == [(0, 1), (1, 2)]
    assert essential == [0]


# ---------------------------------------------------------------------------
# Small filtrations
# ---------------------------------------------------------------------------

def test_single_vertex() -> None:
    bc = barcode(from_events([(0, "a")]), Q)
    assert bc.intervals(0) == [Interval(0, None)]
    assert bc.max_dim == 0


def test_late_vertex_merges_into_early_one() -> None:
    filt = from_events([(0, "a"), (3, "b"), (5, "ab")])
    bc = barcode(filt, Q, verify=True)
    assert bc.intervals(0) == [Interval(0, None), Interval(3, 5)]
    assert bc.intervals(1) == []


def test_hollow_triangle_has_an_essential_loop() -> None:
    filt = from_events([(0, "a"), (0, "b"), (0, "c"), (1, "ab"), (1, "bc"), (2, "ac")])
    bc = barcode(filt, Q, verify=True)
    assert bc.intervals(1) == [Interval(2, None)]
    rep = bc.in_dim(1)[0].representative
    assert format_chain(rep, Q) == "-[a b] - [b c] + [a c]"


def test_empty_filtration_has_no_bars() -> None:
    filt = from_events([])
    assert barcode(filt, Q).bars == ()
    assert persistent_homology(filt, 0, Q) == []


def test_max_dim_beyond_complex() -> None:
    bc = barcode(square_filtration(), Q, max_dim=3)
    assert bc.counts() == {0: 3, 1: 2, 2: 0, 3: 0}


def test_barcode_needs_a_field() -> None:
    with pytest.raises(RingMismatchError):
        barcode(square_filtration(), IntegerRing())


def test_negative_max_dim_rejected() -> None:
    with pytest.raises(ValueError):
        barcode(square_filtration(), Q, max_dim=-1)


# ---------------------------------------------------------------------------
# Essential births
# ---------------------------------------------------------------------------

def test_essential_births_by_difference() -> None:
    assert essential_births_by_difference([0, 0, 1, 1], [0, 1]) == [0, 1]
    assert essential_births_by_difference([2, 3], [2, 3]) == []
    with pytest.raises(InvariantViolation):
        essential_births_by_difference([1], [0])


def test_essential_births_by_membership() -> None:
    one, zero = Q.one(), Q.zero()
    kernel = [(0, (one, zero)), (0, (zero, one)), (2, (one, one))]
    generators = [(1, (one, -one))]
    chosen = essential_births_by_membership(Q, kernel, generators)
    assert [d for d, _ in chosen] == [0, 0]


# ---------------------------------------------------------------------------
# check_barcode
# ---------------------------------------------------------------------------

def test_check_barcode_accepts_square() -> None:
    check_barcode(square_filtration(), _q_barcode())


def test_check_barcode_rejects_missing_bar() -> None:
    bc = _q_barcode()
    short = replace(bc, bars=tuple(b for b in bc.bars if b.interval != Interval(3, 4)))
    with pytest.raises(InvariantViolation, match="Euler"):
        check_barcode(square_filtration(), short)


def test_check_barcode_rejects_swapped_representative() -> None:
    bc = _q_barcode()
    long_bar, short_bar = bc.in_dim(1)
    bad = Bar(1, long_bar.interval, short_bar.representative)
    tampered = replace(bc, bars=tuple(bad if b == long_bar else b for b in bc.bars))
    with pytest.raises(InvariantViolation, match="not a cycle at birth"):
        check_barcode(square_filtration(), tampered)


def test_check_barcode_rejects_early_death() -> None:
    bc = _q_barcode()
    long_bar = bc.in_dim(1)[0]
    bad = Bar(1, Interval(2, 6), long_bar.representative)
    tampered = replace(bc, bars=tuple(bad if b == long_bar else b for b in bc.bars))
    with pytest.raises(InvariantViolation):
        check_barcode(square_filtration(), tampered)


@pytest.mark.parametrize("field", [Q, PrimeField(2), PrimeField(3)])
def test_random_barcodes_pass_checks(field) -> None:
    for seed in range(60):
        filt = random_filtration(RandomState(seed))
        bc = barcode(filt, field, verify=True)
        for bar in bc.bars:
            assert bar.representative is not None, f"seed={seed}"
            assert bar.interval.birth <= filt.horizon
            assert bar.interval.death is None or bar.interval.death <= filt.horizon
