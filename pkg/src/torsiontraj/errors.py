"""Exception types shared across the library.

Usage errors (bad parameters, malformed data) and computation refusals
(capability limits, failed gate hypotheses) are kept distinct so the
command-line layer can map them to different exit codes.
"""


class TorsionTrajError(Exception):
    """Base class for all library errors."""


class DimensionError(TorsionTrajError):
    """Matrix shapes are incompatible with the requested operation."""


class SingularMatrixError(TorsionTrajError):
    """A nonsingular matrix was required; carries the offending determinant."""

    def __init__(self, message="matrix is singular", determinant=0):
        super().__init__(message)
        self.determinant = determinant


class ParameterError(TorsionTrajError):
    """A parameter is outside the documented domain of an operation."""


class ValidationError(TorsionTrajError):
    """Structured data (a homomorphism, a package) violates its invariants."""


class CapabilityError(TorsionTrajError):
    """The input is valid but beyond what this implementation supports."""
