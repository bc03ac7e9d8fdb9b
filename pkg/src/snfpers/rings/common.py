"""
Base classes shared by all coefficient rings.

Every ring used by the matrix algorithms is a Euclidean domain exposing the
same small capability surface: ring arithmetic on its elements, a division
algorithm with a norm, and a canonical choice of associate.  Elements are
plain immutable Python values (``int``, ``fractions.Fraction``,
:class:`~snfpers.rings.prime_field.PrimeFieldElem`,
:class:`~snfpers.rings.polynomials.GradedPolynomial`) that support ``+``,
``-`` and ``*``; the ring object supplies everything that needs to know which
ring an element lives in.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from snfpers.errors import ParseError

_FRACTION_TOKEN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def parse_fraction_token(text: str) -> Fraction:
    """Parse ``-?[0-9]+`` or ``-?[0-9]+/[0-9]+`` into a :class:`Fraction`.

    Raises :class:`~snfpers.errors.ParseError` on anything else, including a
    zero denominator.
    """
    match = _FRACTION_TOKEN.match(text.strip())
    if match is None:
        raise ParseError(f"not a number: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def is_prime(p: int) -> bool:
    """Trial-division primality test (fine for p ≤ 2**16)."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Base rings
# ---------------------------------------------------------------------------

class EuclideanRing(ABC):
    """Abstract Euclidean domain.

    Subclasses must implement :meth:`zero`, :meth:`one`, :meth:`contains`,
    :meth:`coerce`, :meth:`div_rem`, :meth:`norm`, :meth:`is_unit`,
    :meth:`unit_normalize`, :meth:`parse` and :meth:`format`.

    Contract
    --------
    * ``div_rem(a, b) == (q, r)`` implies ``a == q*b + r`` and either
      ``r == 0`` or ``norm(r) < norm(b)``.
    * ``unit_normalize(a) == (u, c)`` implies ``a == u*c``, ``u`` is a unit and
      ``c`` is the canonical associate of ``a`` (``c == 0`` iff ``a == 0``).
    """

    #: short registry name, e.g. ``"z"`` or ``"z5x"``
    name: str = ""
    #: display label used in text and JSON output, e.g. ``"Z"`` or ``"Q[x]"``
    label: str = ""
    is_field: bool = False

    # -- required interface --------------------------------------------------

    @abstractmethod
    def zero(self) -> Any:
        """Additive identity."""

    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @abstractmethod
    def contains(self, a: Any) -> bool:
        """Return ``True`` iff *a* is an element of this ring."""

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Convert an ``int`` (or an element of this ring) into this ring.

        Raises :class:`~snfpers.errors.RingMismatchError` for values that have
        no image in the ring.
        """

    @abstractmethod
    def div_rem(self, a: Any, b: Any) -> tuple[Any, Any]:
        """Deterministic division with remainder; ``ZeroDivisionError`` if b = 0."""

    @abstractmethod
    def norm(self, a: Any) -> int:
        """Euclidean norm (only meaningful for nonzero *a*)."""

    @abstractmethod
    def is_unit(self, a: Any) -> bool:
        """Return ``True`` iff *a* is invertible."""

    @abstractmethod
    def unit_normalize(self, a: Any) -> tuple[Any, Any]:
        """Split *a* into ``(unit, canonical associate)``."""

    @abstractmethod
    def parse(self, text: str) -> Any:
        """Parse the textual element syntax of this ring."""

    @abstractmethod
    def format(self, a: Any) -> str:
        """Inverse of :meth:`parse` (no whitespace in the output)."""

    # -- derived operations --------------------------------------------------

    def add(self, a: Any, b: Any) -> Any:
        return a + b

    def negate(self, a: Any) -> Any:
        return -a

    def multiply(self, a: Any, b: Any) -> Any:
        return a * b

    def is_zero(self, a: Any) -> bool:
        return a == self.zero()

    def divides(self, a: Any, b: Any) -> bool:
        """Return ``True`` iff *a* divides *b*."""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.div_rem(b, a)[1])

    def unit_inverse(self, u: Any) -> Any:
        """Inverse of the unit *u*; ``ValueError`` if *u* is not a unit."""
        if not self.is_unit(u):
            raise ValueError(f"{self.format(u)} is not a unit of {self.label}")
        q, r = self.div_rem(self.one(), u)
        return q

    def canonical(self, a: Any) -> Any:
        """Canonical associate of *a*."""
        return self.unit_normalize(a)[1]

    def __str__(self) -> str:
        return self.label


class Field(EuclideanRing):
    """A field viewed as a Euclidean domain with ``norm(x) = 1`` for x ≠ 0."""

    is_field = True

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        """Multiplicative inverse; ``ZeroDivisionError`` for zero."""

    def div_rem(self, a: Any, b: Any) -> tuple[Any, Any]:
        if self.is_zero(b):
            raise ZeroDivisionError(f"division by zero in {self.label}")
        return a * self.inverse(b), self.zero()

    def norm(self, a: Any) -> int:
        return 0 if self.is_zero(a) else 1

    def is_unit(self, a: Any) -> bool:
        return not self.is_zero(a)

    def unit_normalize(self, a: Any) -> tuple[Any, Any]:
        if self.is_zero(a):
            return self.one(), self.zero()
        return a, self.one()

    def unit_inverse(self, u: Any) -> Any:
        if self.is_zero(u):
            raise ValueError(f"0 is not a unit of {self.label}")
        return self.inverse(u)
