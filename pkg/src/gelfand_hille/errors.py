"""Exception hierarchy shared by all modules."""


class GelfandHilleError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(GelfandHilleError, ValueError):
    """Dimensions of matrices/vectors do not agree."""


class SpectrumError(GelfandHilleError, ArithmeticError):
    """A matrix is not unipotent / nilpotent where a finite series needs it to be."""


class NotNilpotentError(SpectrumError):
    pass


class ConsistencyError(GelfandHilleError, RuntimeError):
    """An internal exact cross-check failed."""
