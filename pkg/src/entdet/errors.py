"""Exception types shared across the package."""


class EntdetError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(EntdetError, ValueError):
    """Input has the wrong length, dimensions, or subsystem sizes."""


class DegenerateStateError(EntdetError, ValueError):
    """Amplitude vector (or matrix) has zero norm and cannot be normalized."""


class RangeError(EntdetError, ValueError):
    """Scalar argument lies outside its mathematically valid range."""


class DocumentError(EntdetError, ValueError):
    """State document is malformed (bad JSON, missing fields, wrong basis/norm)."""


class ClosureError(EntdetError):
    """A generator family does not close under commutation.

    Attributes
    ----------
    residuals : numpy.ndarray
        Pairwise Frobenius residuals ``||[G_i, G_j] - 2i sum_k f_ijk G_k||``.
    labels : tuple of str
        Generator labels indexing ``residuals``.
    """

    def __init__(self, message, residuals, labels):
        super().__init__(message)
        self.residuals = residuals
        self.labels = labels
