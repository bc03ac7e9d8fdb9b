"""
RationalField — ℚ with :class:`fractions.Fraction` elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from snfpers.errors import RingMismatchError
from snfpers.rings.common import Field, parse_fraction_token


@dataclass(frozen=True)
class RationalField(Field):
    """The field ℚ; elements are always :class:`Fraction` instances."""

    name = "q"
    label = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, a: Any) -> bool:
        return isinstance(a, Fraction)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise RingMismatchError(f"{value!r} is not a rational number")

    def inverse(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("rational division by zero")
        return 1 / a

    def parse(self, text: str) -> Fraction:
        return parse_fraction_token(text)

    def format(self, a: Fraction) -> str:
        return str(a)
