"""
PolynomialRing — 𝔽[x] over ℚ or ℤ_p with the standard grading.

A polynomial is homogeneous of degree t when it is a single monomial
``a·x^t`` with ``a ≠ 0``; :func:`degh` returns that t and ``None`` for the
zero polynomial and for polynomials with two or more terms.

Textual syntax is a sum of ``c x^d`` terms without spaces, e.g. ``3x^2+1``,
``-x``, ``1/2x^3-x+2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from snfpers.errors import ParseError, RingMismatchError
from snfpers.rings.common import EuclideanRing, Field

_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(x(?:\^(\d+))?)?")


@dataclass(frozen=True)
class GradedPolynomial:
    """Polynomial with coefficients in *field*.

    ``terms`` holds ``(degree, coefficient)`` pairs in ascending degree with no
    zero coefficients; the zero polynomial has no terms.  Build instances
    through :meth:`PolynomialRing.from_terms` or the arithmetic operators.
    """

    field: Field
    terms: tuple[tuple[int, Any], ...] = ()

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, ``None`` for zero."""
        return self.terms[-1][0] if self.terms else None

    @property
    def leading_coefficient(self) -> Any:
        return self.terms[-1][1] if self.terms else self.field.zero()

    def coefficient(self, d: int) -> Any:
        for deg, c in self.terms:
            if deg == d:
                return c
        return self.field.zero()

    def is_homogeneous(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ----------------------------------------------------------

    def _combine(self, other: GradedPolynomial, sign: int) -> GradedPolynomial:
        acc: dict[int, Any] = dict(self.terms)
        for d, c in other.terms:
            acc[d] = acc.get(d, self.field.zero()) + (c if sign > 0 else -c)
        return _from_mapping(self.field, acc)

    def _scalar(self, other: Any) -> Any:
        if isinstance(other, GradedPolynomial):
            if other.field != self.field:
                raise RingMismatchError(
                    f"cannot mix {self.field.label}[x] and {other.field.label}[x]"
                )
            return None
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.coerce(other)
        if self.field.contains(other):
            return other
        return NotImplemented

    def __add__(self, other: Any) -> GradedPolynomial:
        s = self._scalar(other)
        if s is NotImplemented:
            return NotImplemented
        if s is not None:
            other = _from_mapping(self.field, {0: s})
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Any) -> GradedPolynomial:
        s = self._scalar(other)
        if s is NotImplemented:
            return NotImplemented
        if s is not None:
            other = _from_mapping(self.field, {0: s})
        return self._combine(other, -1)

    def __rsub__(self, other: Any) -> GradedPolynomial:
        return (-self) + other

    def __neg__(self) -> GradedPolynomial:
        return GradedPolynomial(self.field, tuple((d, -c) for d, c in self.terms))

    def __mul__(self, other: Any) -> GradedPolynomial:
        s = self._scalar(other)
        if s is NotImplemented:
            return NotImplemented
        if s is not None:
            return _from_mapping(self.field, {d: c * s for d, c in self.terms})
        acc: dict[int, Any] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                acc[d1 + d2] = acc.get(d1 + d2, self.field.zero()) + c1 * c2
        return _from_mapping(self.field, acc)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_polynomial(self)


def _from_mapping(field: Field, coeffs: dict[int, Any]) -> GradedPolynomial:
    zero = field.zero()
    return GradedPolynomial(
        field, tuple(sorted((d, c) for d, c in coeffs.items() if c != zero))
    )


def degh(f: GradedPolynomial) -> int | None:
    """Homogeneous degree of *f*, or ``None`` when it is undefined."""
    if len(f.terms) != 1:
        return None
    return f.terms[0][0]


def format_polynomial(f: GradedPolynomial) -> str:
    if not f.terms:
        return "0"
    out = ""
    for d, c in reversed(f.terms):
        coef = f.field.format(c)
        if d > 0 and coef == "1":
            coef = ""
        elif d > 0 and coef == "-1":
            coef = "-"
        mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        term = coef + mono
        if out and not term.startswith("-"):
            out += "+"
        out += term
    return out


@dataclass(frozen=True)
class PolynomialRing(EuclideanRing):
    """𝔽[x] with norm = degree, monic canonical associates."""

    field: Field

    def __post_init__(self) -> None:
        if not isinstance(self.field, Field):
            raise RingMismatchError(
                f"polynomial coefficients must come from a field, got {self.field}"
            )

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"{self.field.name}x"

    @property
    def label(self) -> str:  # type: ignore[override]
        return f"{self.field.label}[x]"

    # -- constructors --------------------------------------------------------

    def from_terms(self, coeffs: dict[int, Any]) -> GradedPolynomial:
        """Build a polynomial from ``{degree: coefficient}`` (zeros dropped)."""
        for d in coeffs:
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"degrees must be natural numbers, got {d!r}")
        return _from_mapping(
            self.field, {d: self.field.coerce(c) for d, c in coeffs.items()}
        )

    def monomial(self, c: Any, t: int) -> GradedPolynomial:
        """``c·x^t``."""
        return self.from_terms({t: c})

    def x(self) -> GradedPolynomial:
        return self.monomial(1, 1)

    # -- EuclideanRing interface ---------------------------------------------

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial(self.field)

    def one(self) -> GradedPolynomial:
        return self.monomial(1, 0)

    def contains(self, a: Any) -> bool:
        return isinstance(a, GradedPolynomial) and a.field == self.field

    def coerce(self, value: Any) -> GradedPolynomial:
        if self.contains(value):
            return value
        if (isinstance(value, int) and not isinstance(value, bool)) or self.field.contains(value):
            return self.from_terms({0: value})
        raise RingMismatchError(f"{value!r} is not an element of {self.label}")

    def div_rem(
        self, a: GradedPolynomial, b: GradedPolynomial
    ) -> tuple[GradedPolynomial, GradedPolynomial]:
        if not b.terms:
            raise ZeroDivisionError(f"polynomial division by zero in {self.label}")
        lead_inv = self.field.inverse(b.leading_coefficient)
        db = b.degree
        quotient: dict[int, Any] = {}
        rem = a
        while rem.terms and rem.degree >= db:
            shift = rem.degree - db
            c = rem.leading_coefficient * lead_inv
            quotient[shift] = c
            rem = rem - _from_mapping(self.field, {shift: c}) * b
        return _from_mapping(self.field, quotient), rem

    def norm(self, a: GradedPolynomial) -> int:
        return a.degree if a.terms else 0

    def is_unit(self, a: GradedPolynomial) -> bool:
        return a.degree == 0

    def unit_normalize(
        self, a: GradedPolynomial
    ) -> tuple[GradedPolynomial, GradedPolynomial]:
        if not a.terms:
            return self.one(), self.zero()
        lead = a.leading_coefficient
        return self.from_terms({0: lead}), a * self.field.inverse(lead)

    def parse(self, text: str) -> GradedPolynomial:
        s = text.strip()
        if not s:
            raise ParseError("empty polynomial")
        acc: dict[int, Any] = {}
        pos = 0
        while pos < len(s):
            match = _TERM.match(s, pos)
            sign, coef, var, exp = match.groups()
            if match.end() == pos or (coef is None and var is None):
                raise ParseError(f"cannot parse polynomial {text!r} at position {pos}")
            if pos > 0 and sign is None:
                raise ParseError(f"missing '+' or '-' in {text!r} at position {pos}")
            c = self.field.parse(coef) if coef is not None else self.field.one()
            if sign == "-":
                c = -c
            d = 0 if var is None else (int(exp) if exp is not None else 1)
            acc[d] = acc.get(d, self.field.zero()) + c
            pos = match.end()
        return _from_mapping(self.field, acc)

    def format(self, a: GradedPolynomial) -> str:
        return format_polynomial(a)

    # -- grading helpers -----------------------------------------------------

    def degh(self, a: GradedPolynomial) -> int | None:
        return degh(a)

    def evaluate(self, a: GradedPolynomial, value: Any) -> Any:
        """Substitute ``x := value`` (a field element)."""
        value = self.field.coerce(value)
        total = self.field.zero()
        for d, c in a.terms:
            power = self.field.one()
            for _ in range(d):
                power = power * value
            total = total + c * power
        return total
