"""Exception hierarchy shared by every solver in the package."""


class SommerfeldError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SommerfeldError, ValueError):
    """Invalid user-supplied configuration or out-of-range parameter."""


class DomainError(SommerfeldError, ValueError):
    """Argument outside the domain where a function is evaluated reliably."""


class RegimeError(SommerfeldError):
    """An asymptotic formula was requested outside its regime of validity.

    ``quantity`` names the offending parameter and ``value`` holds it.
    """

    def __init__(self, message, quantity=None, value=None):
        super().__init__(message)
        self.quantity = quantity
        self.value = value


class SingularPointError(SommerfeldError, ValueError):
    """Evaluation requested at a point where the expression is singular."""


class QuadratureError(SommerfeldError):
    """Base class for numerical integration failures."""


class NonConvergenceError(QuadratureError):
    """The evaluation budget ran out before the tolerance was met.

    ``best`` carries the best available :class:`QuadratureResult`.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class IntegrandError(QuadratureError):
    """The integrand returned NaN or Inf; ``abscissa`` is where it happened."""

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class TruncationError(QuadratureError):
    """No truncation point of a semi-infinite integral satisfied the tail bound."""


class ValidityWarning(UserWarning):
    """An asymptotic formula is used near the edge of its validity region."""
