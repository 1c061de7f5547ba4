"""Exception hierarchy shared by all modules."""

from __future__ import annotations

__all__ = [
    "SL2TilingError",
    "ParseError",
    "NonCanonicalRational",
    "NotAnEdge",
    "InvalidPolygon",
    "Inconsistent",
    "NormalizationFailed",
    "NotAQuiddity",
    "IndexOutOfDomain",
    "InvalidTriple",
    "NotTame",
    "SeparationViolated",
    "BoundExceeded",
]


class SL2TilingError(Exception):
    """Base class for every error raised by the package."""


class ParseError(SL2TilingError, ValueError):
    """Malformed text input."""


class NonCanonicalRational(ParseError):
    """A fraction was written in a reducible or otherwise non-canonical form."""


class NotAnEdge(SL2TilingError, ValueError):
    """Two vertices are not joined in the Farey graph."""


class InvalidPolygon(SL2TilingError, ValueError):
    """A vertex sequence is not a Farey polygon."""


class Inconsistent(SL2TilingError, ValueError):
    """A chord set does not form a triangulation."""


class NormalizationFailed(SL2TilingError, ValueError):
    pass


class NotAQuiddity(SL2TilingError, ValueError):
    pass


class IndexOutOfDomain(SL2TilingError, IndexError):
    pass


class InvalidTriple(SL2TilingError, ValueError):
    pass


class NotTame(SL2TilingError, ValueError):
    """Recurrence coefficients of a tiling depend on the row (or column)."""


class SeparationViolated(SL2TilingError, ValueError):
    pass


class BoundExceeded(SL2TilingError, ValueError):
    """An enumeration was asked to go beyond its supported size."""
