"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation was requested too close to a pole of the potential."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""


class ConvergenceError(NumericalError):
    """An iterative procedure exceeded its iteration cap."""


class GrowthError(NumericalError):
    """A forward recurrence exceeded the overflow guard.

    Signals that the evaluation point is far outside the spectral region or
    that the requested truncation is too large for forward recursion.
    """
