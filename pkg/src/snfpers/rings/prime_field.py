"""
PrimeField — ℤ_p for a prime p ≤ 2**16.

Primality is checked once, by trial division, when the field is built.
Elements are :class:`PrimeFieldElem` values carrying their modulus so that
mixing residues of different fields fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from snfpers.errors import ParseError, RingMismatchError
from snfpers.rings.common import Field, is_prime, parse_fraction_token

MAX_MODULUS = 1 << 16


@dataclass(frozen=True)
class PrimeFieldElem:
    """Residue class ``residue mod modulus`` with ``0 ≤ residue < modulus``."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} out of range for modulus {self.modulus}"
            )

    def _lift(self, other: Any) -> PrimeFieldElem | None:
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise RingMismatchError(
                    f"cannot mix Z{self.modulus} and Z{other.modulus} elements"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return PrimeFieldElem(other % self.modulus, self.modulus)
        return None

    def __add__(self, other: Any) -> PrimeFieldElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem((self.residue + o.residue) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> PrimeFieldElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem((self.residue - o.residue) % self.modulus, self.modulus)

    def __rsub__(self, other: Any) -> PrimeFieldElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> PrimeFieldElem:
        return PrimeFieldElem((-self.residue) % self.modulus, self.modulus)

    def __mul__(self, other: Any) -> PrimeFieldElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem((self.residue * o.residue) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.residue != 0

    def __str__(self) -> str:
        return str(self.residue)


@dataclass(frozen=True)
class PrimeField(Field):
    """The prime field ℤ_p."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p > MAX_MODULUS:
            raise ValueError(f"modulus must be an int ≤ {MAX_MODULUS}, got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"z{self.p}"

    @property
    def label(self) -> str:  # type: ignore[override]
        return f"Z{self.p}"

    def zero(self) -> PrimeFieldElem:
        return PrimeFieldElem(0, self.p)

    def one(self) -> PrimeFieldElem:
        return PrimeFieldElem(1 % self.p, self.p)

    def contains(self, a: Any) -> bool:
        return isinstance(a, PrimeFieldElem) and a.modulus == self.p

    def coerce(self, value: Any) -> PrimeFieldElem:
        if self.contains(value):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElem(value % self.p, self.p)
        raise RingMismatchError(f"{value!r} is not an element of {self.label}")

    def inverse(self, a: PrimeFieldElem) -> PrimeFieldElem:
        if a.residue == 0:
            raise ZeroDivisionError(f"division by zero in {self.label}")
        return PrimeFieldElem(pow(a.residue, -1, self.p), self.p)

    def parse(self, text: str) -> PrimeFieldElem:
        value = parse_fraction_token(text)
        if value.denominator % self.p == 0:
            raise ParseError(f"{text!r} has no value in {self.label}")
        return self.coerce(value.numerator) * self.inverse(self.coerce(value.denominator))

    def format(self, a: PrimeFieldElem) -> str:
        return str(a.residue)
