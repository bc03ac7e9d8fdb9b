"""
run_examples.py — Quick demo of snfpers on the bundled catalog.

Demonstrates:
  1. Homology over ℤ of every catalog complex
  2. The barcode of the square filtration over ℚ, with representatives

Example smoke output::

    === Homology over Z ===
    torus             H_0: Z   H_1: Z^2   H_2: Z
    projective-plane  H_0: Z   H_1: Z/(2)   H_2: 0
    ...

    === Barcode of 'square' over Q ===
    field: Q
    dim 0: [0, 1)  rep -[a] + [b]
    ...

Usage::

    python -m snfpers.scripts.run_examples
"""

from __future__ import annotations

from snfpers.barcode import barcode
from snfpers.catalog import COMPLEXES, FILTRATIONS
from snfpers.formats import format_barcode_text
from snfpers.rings import IntegerRing, RationalField
from snfpers.simplicial import homology_all


def demo_homology() -> None:
    """Print H_n(K; ℤ) for each catalog complex."""
    ring = IntegerRing()
    print(f"=== Homology over {ring.label} ===")
    for name, build in COMPLEXES.items():
        groups = homology_all(build(), ring)
        print(f"{name:<17} " + "   ".join(f"H_{h.dim}: {h.describe(ring)}" for h in groups))
    print()


def demo_barcodes() -> None:
    field = RationalField()
    for name, build in FILTRATIONS.items():
        print(f"=== Barcode of {name!r} over {field.label} ===")
        print(format_barcode_text(barcode(build(), field, verify=True), reps=True))


def main() -> None:
    demo_homology()
    demo_barcodes()


if __name__ == "__main__":
    main()
