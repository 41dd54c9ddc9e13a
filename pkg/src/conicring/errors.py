"""Exception types shared across the package."""

from __future__ import annotations


class ConicRingError(Exception):
    """Base class for every package-specific error."""


class ResourceBoundExceeded(ConicRingError):
    """A configurable resource bound was hit before the computation finished.

    Bounded searches and bounded factorization fail loudly instead of
    returning a possibly wrong answer.
    """


class FactorBoundExceeded(ResourceBoundExceeded):
    """Trial division left a cofactor it cannot certify prime."""

    def __init__(self, cofactor: int, bound: int):
        super().__init__(
            f"unfactored cofactor {cofactor} exceeds {bound}^2; "
            f"raise the factor bound"
        )
        self.cofactor = cofactor
        self.bound = bound


class SearchBoundExceeded(ResourceBoundExceeded):
    """A bounded enumeration (discriminants, coefficients, points) ran out."""


class InvalidConic(ConicRingError, ValueError):
    """Coefficients do not define a smooth conic (a zero coefficient)."""


class ZeroElement(ConicRingError, ValueError):
    """The operation is undefined for the zero ring element."""


class ParseError(ConicRingError, ValueError):
    """Malformed input text; carries a 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
