"""
Exceptions raised by snfpers.

Every class derives from the builtin that callers would otherwise catch, so
``except ValueError`` keeps working for all input problems and
``except RuntimeError`` for internal cross-check failures.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed element, matrix, complex, filtration or barcode text."""


class RingMismatchError(ValueError):
    """An entry does not belong to the expected ring, or a field was required."""


class ClosureError(ValueError):
    """A simplex is present without one of its faces."""


class UnknownVertexError(ValueError):
    """A vertex is not covered by the orientation."""


class MonotonicityError(ValueError):
    """A face is born after one of its cofaces."""


class DuplicateSimplexError(ValueError):
    """The same simplex was given twice with different birth times."""


class GradingError(ValueError):
    """A matrix violates the graded entry-degree invariant."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""
