"""
Exact coefficient rings.

All rings share the :class:`~snfpers.rings.common.EuclideanRing` interface and
are resolved by short name:

>>> from snfpers.rings import get_ring
>>> ring = get_ring("z5x")        # ℤ_5[x]
"""

from __future__ import annotations

import re

from snfpers.errors import RingMismatchError
from snfpers.rings.common import EuclideanRing, Field
from snfpers.rings.integers import IntegerRing
from snfpers.rings.polynomials import GradedPolynomial, PolynomialRing, degh
from snfpers.rings.prime_field import PrimeField, PrimeFieldElem
from snfpers.rings.rationals import RationalField

RING_REGISTRY: dict[str, type[EuclideanRing]] = {
    "z": IntegerRing,
    "q": RationalField,
}

_PRIME_NAME = re.compile(r"^z(\d+)(x?)$")


def get_ring(name: str) -> EuclideanRing:
    """Instantiate a ring by short name.

    Valid names: ``"z"``, ``"q"``, ``"z<p>"`` for a prime p, and the
    polynomial rings ``"qx"`` and ``"z<p>x"``.  Names are case-insensitive.
    """
    key = name.strip().lower()
    cls = RING_REGISTRY.get(key)
    if cls is not None:
        return cls()
    if key == "qx":
        return PolynomialRing(RationalField())
    match = _PRIME_NAME.match(key)
    if match is not None:
        field = PrimeField(int(match.group(1)))
        return PolynomialRing(field) if match.group(2) else field
    raise ValueError(
        f"Unknown ring {name!r}. Choose from {list(RING_REGISTRY)}, 'qx', 'z<p>', 'z<p>x'"
    )


def get_field(name: str) -> Field:
    """Like :func:`get_ring` but only accepts fields (``"q"``, ``"z<p>"``)."""
    ring = get_ring(name)
    if not isinstance(ring, Field):
        raise RingMismatchError(f"{name!r} is not a field; persistence needs 'q' or 'z<p>'")
    return ring


__all__ = [
    "EuclideanRing",
    "Field",
    "IntegerRing",
    "RationalField",
    "PrimeField",
    "PrimeFieldElem",
    "PolynomialRing",
    "GradedPolynomial",
    "degh",
    "RING_REGISTRY",
    "get_ring",
    "get_field",
]
