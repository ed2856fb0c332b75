"""Exception types shared across the package."""


class CrepantoError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class NonGorensteinError(CrepantoError):
    """Raised when an operation requires a Gorenstein quotient type."""


class SmallnessError(CrepantoError):
    """Raised when a weight tuple defines a group with pseudoreflections."""


class GuardExceeded(CrepantoError):
    """Raised when an input exceeds the desk-scale guard.

    Set the CREPANTO_GUARD environment variable to raise the limit.
    """
