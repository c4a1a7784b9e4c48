"""Exception hierarchy shared by every module."""


class SphereCurveError(Exception):
    """Base class for all errors raised by spherecurves."""


class ConfigurationError(SphereCurveError, ValueError):
    """Invalid user input: bad radius, unparsable expression, bad domain."""


class NumericalError(SphereCurveError, ArithmeticError):
    """A numerical computation could not be carried out."""


class DegenerateVector(NumericalError):
    pass


class InvalidRadius(ConfigurationError):
    pass


class NotUnitSpeed(NumericalError):
    pass


class OffSphere(NumericalError):
    pass


class NonMonotoneArcLength(NumericalError):
    pass


class DomainEdge(NumericalError):
    """A difference stencil would leave the curve's parameter domain."""


class OutOfRange(NumericalError):
    pass
