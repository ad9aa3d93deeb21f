"""Exception and warning classes raised by psiaccel."""


class PsiAccelError(Exception):
    """Base class for all psiaccel errors."""


class DomainError(PsiAccelError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """The argument hits a pole of the function being evaluated."""


class ConfigurationError(PsiAccelError, ValueError):
    """Inconsistent inputs, e.g. a zeta cache that is too shallow."""


class SingularTransformError(PsiAccelError, ZeroDivisionError):
    """A transformation ratio q equals -1, so 1 + q vanishes."""


class TruncationWarning(RuntimeWarning):
    """An infinite series hit its term cap before meeting its tolerance."""


class StabilityWarning(RuntimeWarning):
    """An explicit symmetric-polynomial sum was evaluated at large order."""
