"""Exception types raised by orbitsep."""


class OrbitSepError(Exception):
    """Base class for all library errors."""


class DimensionError(OrbitSepError, ValueError):
    """Shapes of matrices or tuples do not fit together."""


class FieldMismatchError(OrbitSepError, ValueError):
    """Two objects that must share a field do not."""


class SingularMatrixError(OrbitSepError, ArithmeticError):
    """An inverse was requested for a matrix with determinant zero."""

    def __init__(self, message="matrix is singular", det=0):
        super().__init__(message)
        self.det = det


class FieldTooSmallError(OrbitSepError):
    """The prime field is too small for randomized certification."""


class CertificateSearchError(OrbitSepError, RuntimeError):
    """A randomized certificate search failed where one must exist."""
