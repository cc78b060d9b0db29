"""Exception types raised across the package."""


class BooleError(Exception):
    """Base class for all domain errors raised by this package."""


class UndefinedDegreeError(BooleError, ValueError):
    """An operation needed the degree of the zero polynomial."""


class InvalidStepError(BooleError, ValueError):
    """A difference step or grid step was zero."""


class DimensionError(BooleError, ValueError):
    """Input lengths do not agree with each other or with a requested depth."""


class DegenerateNodesError(BooleError, ValueError):
    """Interpolation nodes are not pairwise distinct."""


class DegreeOverflowError(BooleError, ValueError):
    """The polynomial degree exceeds the number of grid steps."""


class OutOfRangeError(BooleError, ValueError):
    """An integer argument lies outside the supported range."""


class PolynomialSyntaxError(BooleError, ValueError):
    """Malformed polynomial text. ``column`` is 1-based."""

    def __init__(self, message, column=None):
        self.message = message
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
