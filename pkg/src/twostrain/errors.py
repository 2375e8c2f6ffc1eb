"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid model input (bad rates, degree support, config values, ...)."""


class DimensionError(ParameterError):
    """State and degree distribution do not share the same support."""


class ConvergenceError(RuntimeError):
    """Iterative solver exhausted its iteration budget.

    Carries the last residual in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IntegrationError(RuntimeError):
    """Base class for time-integration failures."""


class IntegrationAccuracyError(IntegrationError):
    """A step needed more than the tolerated amount of simplex clipping."""


class IntegrationInstabilityError(IntegrationError):
    """The state left the tolerated neighbourhood of [0, 1]; reduce dt."""


class InfeasibleRegimeError(ValueError):
    """The requested equilibrium regime has an empty control region."""


class IllConditionedGradientError(RuntimeError):
    """Implicit differentiation breaks down at the epidemic threshold."""


class DegenerateTieError(RuntimeError):
    """Objective is undefined at an exact threshold tie (T1 = T2 > 1)."""
