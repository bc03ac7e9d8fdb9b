"""
Randomised agreement between barcodes and the brute-force rank oracle.

For seeded random filtrations over ℚ, ℤ_2 and ℤ_3, in every dimension:

* the bars from the graded SND have the rank profile of H_n(K_•) computed by
  plain elimination, and
* p_persistent_betti matches the rank of H_n(K_t) → H_n(K_{t+p}) for every
  window inside the horizon.

H_0 bars are also compared across fields.
"""

from __future__ import annotations

import pytest
from numpy.random import RandomState

from snfpers.barcode import barcode, p_persistent_betti
from snfpers.persmod_oracle import check_interval_decomposition, from_filtration, inclusion_rank
from snfpers.random_inputs import random_filtration
from snfpers.rings import PrimeField, RationalField

_FIELDS = [RationalField(), PrimeField(2), PrimeField(3)]

_SEEDS = 100


@pytest.mark.parametrize("field", _FIELDS)
def test_bars_match_rank_oracle(field) -> None:
    for seed in range(_SEEDS):
        filt = random_filtration(RandomState(seed))
        bc = barcode(filt, field)
        for n in range(bc.max_dim + 1):
            module = from_filtration(filt, n, field)
            assert check_interval_decomposition(module, bc.intervals(n)), f"seed={seed} n={n}"


@pytest.mark.parametrize("field", _FIELDS)
def test_persistent_betti_matches_inclusion_rank(field) -> None:
    for seed in range(0, _SEEDS, 4):
        filt = random_filtration(RandomState(seed))
        bc = barcode(filt, field)
        for n in range(bc.max_dim + 1):
            bars = bc.in_dim(n)
            for t in range(filt.horizon + 1):
                for p in range(filt.horizon - t + 1):
                    expected = inclusion_rank(filt, n, field, t, t + p)
                    got = p_persistent_betti(bars, t, p)
                    assert got == expected, f"seed={seed} n={n} t={t} p={p}"


def test_h0_bars_do_not_depend_on_the_field() -> None:
    for seed in range(_SEEDS):
        filt = random_filtration(RandomState(seed), max_dim=1)
        reference = barcode(filt, _FIELDS[0]).intervals(0)
        for field in _FIELDS[1:]:
            assert barcode(filt, field).intervals(0) == reference, f"seed={seed}"
