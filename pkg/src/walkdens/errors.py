"""Exception taxonomy shared by all walkdens modules."""


class WalkdensError(Exception):
    """Base class for all library-specific errors."""


class NonConvergence(WalkdensError):
    """A series or quadrature failed to reach the requested tolerance."""

    def __init__(self, message, value=None, err=None):
        super().__init__(message)
        self.value = value
        self.err = err


class DomainError(WalkdensError, ValueError):
    """Input outside the mathematical domain of the operation."""


class SingularInput(DomainError):
    """Input sits exactly on a singularity (e.g. elliptic_k at modulus 1)."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the function."""


class GuardExceeded(WalkdensError):
    """A combinatorial-size or truncation guard was exceeded."""


class MethodUnavailable(WalkdensError, ValueError):
    """The requested (method, argument) combination is not supported."""


class SlowConvergence(UserWarning):
    """Non-fatal: a tail estimate exceeded the requested tolerance."""
