"""Exception hierarchy shared by every evaluator."""


class GreenError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GreenError, ValueError):
    pass


class DomainError(GreenError, ValueError):
    pass


class ParameterError(GreenError, ValueError):
    pass


class UnsupportedParameter(ParameterError):
    """The parameter regime is valid but the requested route cannot handle it."""


class ExcludedParameter(ParameterError):
    """The parameter sits on a point explicitly excluded by the integral formula."""


class PreconditionError(GreenError, ValueError):
    pass


class CompatibilityError(GreenError, ValueError):
    """Right-hand side carries a mode that the operator annihilates."""


class InternalError(GreenError, RuntimeError):
    pass


class AccuracyError(GreenError, ArithmeticError):
    """Requested accuracy was not reached.

    The best available value and its error estimate are attached so callers
    can still report them.
    """

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate
