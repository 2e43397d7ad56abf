"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point lies outside the domain of a profile, potential or state."""


class SingularityError(ArithmeticError):
    """Evaluation hit a zero of a profile function (division by A(x) or M(x))."""


class PoleError(ArithmeticError):
    """Evaluation hit a pole of the potential chain (E = V_R at a sample point)."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge; the message carries diagnostics."""
