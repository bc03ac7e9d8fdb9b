"""
bench.py — Time the SND, graded SND and barcode pipelines on seeded random inputs.

Usage::

    python -m snfpers.scripts.bench
"""

from __future__ import annotations

import time

from numpy.random import RandomState

from snfpers.barcode import barcode
from snfpers.matrices import graded_snd, snd, verify_snd
from snfpers.random_inputs import random_filtration, random_graded_matrix, random_matrix
from snfpers.rings import IntegerRing, PrimeField, RationalField


def bench_snd(size: int = 8, repeats: int = 100) -> dict:
    """SND of random square integer matrices; also counts verified results."""
    ring = IntegerRing()
    t0 = time.perf_counter()
    verified = 0
    for seed in range(repeats):
        a = random_matrix(RandomState(seed), ring, max_rows=size, max_cols=size)
        verified += verify_snd(a, snd(a))
    elapsed = time.perf_counter() - t0
    return {"name": f"snd Z (<= {size}x{size})", "repeats": repeats,
            "elapsed_s": elapsed, "ok": verified}


def bench_graded(size: int = 8, repeats: int = 100) -> dict:
    field = RationalField()
    t0 = time.perf_counter()
    ok = 0
    for seed in range(repeats):
        g = random_graded_matrix(RandomState(seed), field, max_rows=size, max_cols=size)
        ok += verify_snd(g.base, graded_snd(g, check_steps=True).snd)
    elapsed = time.perf_counter() - t0
    return {"name": f"graded snd Q[x] (<= {size}x{size})", "repeats": repeats,
            "elapsed_s": elapsed, "ok": ok}


def bench_barcode(max_simplices: int = 20, repeats: int = 50) -> dict:
    field = PrimeField(2)
    t0 = time.perf_counter()
    for seed in range(repeats):
        barcode(random_filtration(RandomState(seed), max_simplices=max_simplices), field)
    elapsed = time.perf_counter() - t0
    return {"name": f"barcode Z2 (<= {max_simplices} simplices)", "repeats": repeats,
            "elapsed_s": elapsed, "ok": repeats}


def main() -> None:
    header = f"{'Benchmark':<34} {'Runs':>6} {'Runs/s':>10} {'Time (s)':>10} {'OK':>6}"
    print(header)
    print("-" * len(header))
    for res in (bench_snd(), bench_graded(), bench_barcode()):
        print(
            f"{res['name']:<34} {res['repeats']:>6} "
            f"{res['repeats'] / res['elapsed_s']:>10,.1f} "
            f"{res['elapsed_s']:>10.3f} {res['ok']:>6}"
        )
    print()


if __name__ == "__main__":
    main()
