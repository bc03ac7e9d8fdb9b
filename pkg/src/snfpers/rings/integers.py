"""
IntegerRing — the integers ℤ with arbitrary-precision Python ``int`` elements.

Remainders are canonicalised to ``0 ≤ r < |b|`` so that every reduction built
on top of :meth:`IntegerRing.div_rem` is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from snfpers.errors import ParseError, RingMismatchError
from snfpers.rings.common import EuclideanRing


@dataclass(frozen=True)
class IntegerRing(EuclideanRing):
    """The Euclidean domain ℤ with norm ``|a|``."""

    name = "z"
    label = "Z"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def contains(self, a: Any) -> bool:
        return isinstance(a, int) and not isinstance(a, bool)

    def coerce(self, value: Any) -> int:
        if self.contains(value):
            return value
        raise RingMismatchError(f"{value!r} is not an integer")

    def div_rem(self, a: int, b: int) -> tuple[int, int]:
        if b == 0:
            raise ZeroDivisionError("integer division by zero")
        q, r = divmod(a, abs(b))
        if b < 0:
            q = -q
        return q, r

    def norm(self, a: int) -> int:
        return abs(a)

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def unit_normalize(self, a: int) -> tuple[int, int]:
        if a < 0:
            return -1, -a
        return 1, a

    def parse(self, text: str) -> int:
        token = text.strip()
        sign = token[1:] if token[:1] == "-" else token
        if not sign.isdigit():
            raise ParseError(f"not an integer: {text!r}")
        return int(token)

    def format(self, a: int) -> str:
        return str(a)
