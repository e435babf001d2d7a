"""Exception hierarchy.

Everything raised deliberately by the library derives from ``CofisoError`` so
callers (the CLI in particular) can separate domain failures from bugs.
"""


class CofisoError(Exception):
    """Base class for all library errors."""


class DimensionError(CofisoError, ValueError):
    """Operands live in different dimensions, or a dimension is invalid."""


class RangeError(CofisoError, ValueError):
    """A size parameter is outside the supported range."""


class NotIdempotentError(CofisoError, ValueError):
    pass


class NotMaximalError(CofisoError, ValueError):
    pass


class ExcludedSetOutsideBox(CofisoError, ValueError):
    pass


class NotCoordinatePermutation(CofisoError, ValueError):
    """A window map is not the restriction of any coordinate permutation."""


class EmptyDomain(CofisoError, ValueError):
    pass


class TooCloseToUpperBoundary(CofisoError, ValueError):
    """The box would truncate the unit sphere around the given point."""


class SliceTooLarge(CofisoError, ValueError):
    pass


class ParseError(CofisoError, ValueError):
    """Malformed literal. ``column`` is 1-based."""

    def __init__(self, message, column, text=None):
        self.column = column
        self.text = text
        super().__init__(f"{message} at column {column}")
