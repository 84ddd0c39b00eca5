"""Exception types raised across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (NaN, inf, ...)."""


class ConfigurationError(ValueError):
    """A spec object (window, plan, experiment config) violates its invariants."""


class UnsupportedKindError(ConfigurationError):
    """Operation asked of a window kind that does not support it."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature ran out of budget.

    Carries the best estimate obtained so far in ``best``.
    """

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


class SingularityError(ArithmeticError):
    """Evaluation point too close to a genuine pole of the requested quantity."""


class DegenerateNodeSetError(ValueError):
    """Node set too close to coincident nodes for stable cardinal interpolation."""


class DegenerateOffsetsError(ValueError):
    """Periodic offsets so close that the cardinal denominator underflows."""


class GenerationError(RuntimeError):
    """Random node/offset generation failed to satisfy constraints."""


class PlanSampleMismatchError(ValueError):
    """Sample set does not match the reconstruction plan's node locations."""


class InsufficientDataError(ValueError):
    """Not enough usable cells for a requested fit."""
