"""Exception hierarchy shared by every module of the package."""


class DedekindError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class NotCoprime(DedekindError, ValueError):
    pass


class PoleError(DedekindError, ZeroDivisionError):
    """A cotangent (or derivative) was requested at an integer multiple of pi."""


class NearPole(PoleError):
    """Numeric evaluation point lies within the pole tolerance of an integer."""


class NotRational(DedekindError, ValueError):
    pass


class ConductorExceeded(DedekindError, ValueError):
    def __init__(self, conductor, cap):
        super().__init__(f"conductor {conductor} exceeds cap {cap}; use numeric mode")
        self.conductor = conductor
        self.cap = cap


class SingularConfiguration(DedekindError, ValueError):
    pass


class ParityError(DedekindError, ValueError):
    pass


class AllZeroOrders(DedekindError, ValueError):
    pass


class AllIntegerShifts(DedekindError, ValueError):
    pass


class OddDimension(DedekindError, ValueError):
    pass


class MissingParameters(DedekindError, ValueError):
    pass


class WeightViolation(DedekindError, ValueError):
    pass
