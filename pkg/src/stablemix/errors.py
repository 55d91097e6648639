"""Exception types shared across the package."""

__all__ = [
    "ArgumentError",
    "ConstraintError",
    "DomainError",
    "NonConvergenceError",
    "PoleError",
    "QuadratureError",
    "TabulationError",
    "UnsupportedMixingError",
]


class DomainError(ValueError):
    """Evaluation point lies outside the domain of the operation."""


class ConstraintError(ValueError):
    """Parameter set violates a structural constraint of the law."""


class PoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class NonConvergenceError(ArithmeticError):
    """A series or expansion failed to reach the requested tolerance."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature could not certify the requested tolerance."""


class TabulationError(ArithmeticError):
    """A density table could not be built to specification."""


class ArgumentError(ValueError):
    """Invalid argument to a driver-level routine."""


class UnsupportedMixingError(TypeError):
    """The requested operation is undefined for this mixing descriptor."""
