class ArcticError(Exception):
    """Base class for every error raised by the arctic package."""


class ArgumentError(ArcticError, ValueError):
    """Parameters outside a model domain, bad indices or ranges."""


class SingularityError(ArcticError, ZeroDivisionError):
    """A pole of a kernel, weight or trigonometric denominator was hit."""


class CapacityError(ArcticError):
    """Brute-force enumeration requested beyond its size cap."""


class DegenerateEnvelopeError(ArcticError):
    """The tangent family has A'(xi) = 0, so the envelope point is undefined."""


class OutputError(ArcticError):
    """An output file could not be written or read back."""
