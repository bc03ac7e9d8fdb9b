"""
Unit tests — finite-type persistence modules and the rank oracle.

* Interval modules, direct sums and ranks of composed structure maps.
* H_n of the square filtration built by plain elimination.
* check_interval_decomposition accepts the true bars and rejects wrong ones.
* inclusion_rank on hand-checked windows, and the error cases.
* Seeded direct sums of up to six intervals: the generating multiset is the
  only decomposition among its one-interval neighbours, and ranks never grow
  along composed maps.
"""

from __future__ import annotations

import pytest
from numpy.random import RandomState

from snfpers.barcode import Interval
from snfpers.catalog import square_filtration
from snfpers.errors import RingMismatchError
from snfpers.matrices import Matrix
from snfpers.persmod_oracle import (
    FiniteTypePersMod,
    check_interval_decomposition,
    direct_sum,
    direct_sum_of_intervals,
    from_filtration,
    inclusion_rank,
    interval_module,
    rank_map,
    rank_table,
    zero_module,
)
from snfpers.random_inputs import uniform_int
from snfpers.rings import IntegerRing, PrimeField, RationalField

Q = RationalField()
F2 = PrimeField(2)

_SQUARE_BARS = {
    0: [Interval(0, 1), Interval(0, None), Interval(1, 2)],
    1: [Interval(2, 5), Interval(3, 4)],
    2: [],
}

# (interval, horizon, expected dims)
_INTERVAL_DIMS = [
    (Interval(0, None), 3, (1, 1, 1, 1)),
    (Interval(1, 3), 4, (0, 1, 1, 0, 0)),
    (Interval(3, 6), 6, (0, 0, 0, 1, 1, 1, 0)),
    (Interval(2, None), 2, (0, 0, 1)),
]


@pytest.mark.parametrize("interval,horizon,dims", _INTERVAL_DIMS)
def test_interval_module_dims(interval: Interval, horizon: int, dims: tuple[int, ...]) -> None:
    m = interval_module(interval, horizon, Q)
    assert m.dims == dims
    assert len(m.structure_maps) == horizon


def test_interval_module_ranks() -> None:
    m = interval_module(Interval(1, 3), 4, Q)
    assert rank_map(m, 1, 2) == 1
    assert rank_map(m, 1, 3) == 0
    assert rank_map(m, 0, 1) == 0
    assert rank_map(m, 2, 2) == 1


def test_ranks_past_the_horizon_are_constant() -> None:
    m = interval_module(Interval(0, None), 3, Q)
    assert m.dim_at(10) == 1
    assert rank_map(m, 0, 10) == 1
    assert rank_map(m, 7, 9) == 1


@pytest.mark.parametrize(
    "interval,horizon",
    [(Interval(2, 5), 4), (Interval(5, None), 4), (Interval(0, 1), -1)],
)
def test_interval_must_fit_the_horizon(interval: Interval, horizon: int) -> None:
    with pytest.raises(ValueError):
        interval_module(interval, horizon, Q)


def test_direct_sum_pads_the_shorter_module() -> None:
    m = direct_sum(interval_module(Interval(0, 2), 2, Q), interval_module(Interval(1, 3), 3, Q))
    assert m.horizon == 3
    assert m.dims == (1, 2, 1, 0)
    assert rank_map(m, 0, 1) == 1
    assert rank_map(m, 1, 2) == 1


def test_direct_sum_of_square_h0_bars() -> None:
    m = direct_sum_of_intervals(_SQUARE_BARS[0], 5, Q)
    assert m.dims[:3] == (2, 2, 1)
    assert rank_map(m, 0, 1) == 1
    assert rank_map(m, 0, 5) == 1


def test_direct_sum_needs_one_field() -> None:
    with pytest.raises(RingMismatchError):
        direct_sum(zero_module(1, Q), zero_module(1, F2))


def test_structure_map_shapes_are_checked() -> None:
    with pytest.raises(ValueError):
        FiniteTypePersMod(Q, 1, (1, 1), (Matrix.zeros(Q, 2, 1),))
    with pytest.raises(ValueError):
        FiniteTypePersMod(Q, 2, (1, 1), ())
    with pytest.raises(RingMismatchError):
        FiniteTypePersMod(Q, 1, (1, 1), (Matrix.identity(F2, 1),))


def test_rank_table_covers_every_window() -> None:
    table = rank_table(interval_module(Interval(1, 3), 4, Q))
    assert len(table) == 15
    assert table[(1, 2)] == 1
    assert table[(0, 4)] == 0


def test_rank_map_rejects_reversed_window() -> None:
    with pytest.raises(ValueError):
        rank_map(zero_module(2, Q), 2, 1)


# ---------------------------------------------------------------------------
# Homology of the square filtration
# ---------------------------------------------------------------------------

_SQUARE_DIMS = [
    (0, (2, 2, 1, 1, 1, 1)),
    (1, (0, 0, 1, 2, 1, 0)),
    (2, (0, 0, 0, 0, 0, 0)),
]


@pytest.mark.parametrize("field", [Q, F2])
@pytest.mark.parametrize("n,dims", _SQUARE_DIMS)
def test_square_homology_dims(field, n: int, dims: tuple[int, ...]) -> None:
    m = from_filtration(square_filtration(), n, field)
    assert m.horizon == 5
    assert m.dims == dims


@pytest.mark.parametrize("n", [0, 1, 2])
def test_square_bars_decompose_the_module(n: int) -> None:
    m = from_filtration(square_filtration(), n, Q)
    assert check_interval_decomposition(m, _SQUARE_BARS[n])


def test_wrong_bars_are_rejected() -> None:
    m = from_filtration(square_filtration(), 0, Q)
    assert not check_interval_decomposition(m, [Interval(0, None), Interval(0, 2), Interval(1, 2)])
    assert not check_interval_decomposition(m, _SQUARE_BARS[0][:2])


def test_bars_past_the_horizon_are_rejected() -> None:
    m = from_filtration(square_filtration(), 1, Q)
    assert not check_interval_decomposition(m, [Interval(2, 7), Interval(3, 4)])


def test_zero_module_has_empty_decomposition() -> None:
    assert check_interval_decomposition(zero_module(0, Q), [])
    assert not check_interval_decomposition(zero_module(0, Q), [Interval(0, None)])


_INCLUSION = [
    # (dim, t, s, rank)
    (0, 0, 0, 2),
    (0, 0, 1, 1),
    (0, 1, 2, 1),
    (1, 2, 3, 1),
    (1, 3, 4, 1),
    (1, 2, 5, 0),
    (1, 0, 3, 0),
]


@pytest.mark.parametrize("n,t,s,expected", _INCLUSION)
def test_inclusion_rank(n: int, t: int, s: int, expected: int) -> None:
    assert inclusion_rank(square_filtration(), n, Q, t, s) == expected


def test_oracle_needs_a_field() -> None:
    with pytest.raises(RingMismatchError):
        from_filtration(square_filtration(), 0, IntegerRing())
    with pytest.raises(ValueError):
        inclusion_rank(square_filtration(), 0, Q, 3, 1)


# ---------------------------------------------------------------------------
# Seeded interval decompositions
# ---------------------------------------------------------------------------

def _random_intervals(rng: RandomState, horizon: int) -> list[Interval]:
    out = []
    for _ in range(uniform_int(rng, 0, 6)):
        birth = uniform_int(rng, 0, horizon)
        if birth == horizon or rng.randint(3) == 0:
            out.append(Interval(birth, None))
        else:
            out.append(Interval(birth, uniform_int(rng, birth + 1, horizon)))
    return out


def _perturbations(bars: list[Interval], horizon: int) -> list[list[Interval]]:
    """Multisets one interval away from *bars* that still fit the horizon."""
    out = [bars + [Interval(horizon, None)], bars + [Interval(0, 1)]]
    for i, j in enumerate(bars):
        rest = bars[:i] + bars[i + 1:]
        out.append(rest)
        end = horizon + 1 if j.death is None else j.death
        changed = []
        if j.birth + 1 < end:
            changed.append(Interval(j.birth + 1, j.death))
        if j.birth > 0:
            changed.append(Interval(j.birth - 1, j.death))
        if j.death is None:
            if j.birth < horizon:
                changed.append(Interval(j.birth, horizon))
        else:
            changed.append(Interval(j.birth, None))
            if j.death - 1 > j.birth:
                changed.append(Interval(j.birth, j.death - 1))
            if j.death < horizon:
                changed.append(Interval(j.birth, j.death + 1))
        out += [rest + [c] for c in changed]
    return out


def test_random_direct_sums_decompose_uniquely() -> None:
    for seed in range(60):
        rng = RandomState(seed)
        horizon = uniform_int(rng, 1, 6)
        bars = _random_intervals(rng, horizon)
        m = direct_sum_of_intervals(bars, horizon, Q)
        assert check_interval_decomposition(m, bars), f"seed={seed}"
        for other in _perturbations(bars, horizon):
            assert not check_interval_decomposition(m, other), f"seed={seed}: {other}"


def test_rank_maps_shrink_along_compositions() -> None:
    for seed in range(60):
        rng = RandomState(seed)
        horizon = uniform_int(rng, 1, 6)
        table = rank_table(direct_sum_of_intervals(_random_intervals(rng, horizon), horizon, Q))
        for t in range(horizon + 1):
            for s in range(t, horizon):
                assert table[(t, s + 1)] <= table[(t, s)], f"seed={seed}"
            for s in range(t, horizon + 1):
                for u in range(s, horizon + 1):
                    bound = min(table[(t, s)], table[(s, u)])
                    assert table[(t, u)] <= bound, f"seed={seed} t={t} s={s} u={u}"
