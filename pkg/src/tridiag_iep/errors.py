"""Exception hierarchy shared by the construction, verification and bench code."""


class TridiagError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TridiagError, ValueError):
    """Invalid user-supplied data (maps to CLI exit code 2)."""


class NotStrictlyIncreasing(InputError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(
            message
            or f"eigenvalues must be strictly increasing; violated at index {index}"
        )


class DimensionMismatch(InputError):
    pass


class ZeroPolynomial(TridiagError, ValueError):
    pass


class DivideByZeroPoly(TridiagError, ZeroDivisionError):
    pass


class NumericalBreakdown(TridiagError, ArithmeticError):
    """The naive route lost the structure exact arithmetic guarantees.

    ``step`` is the 1-based division step at which the breakdown was detected.
    """

    def __init__(self, step, message):
        self.step = step
        super().__init__(message)


class DegenerateRemainder(NumericalBreakdown):
    pass


class NonPositiveGamma(NumericalBreakdown):
    pass


class ReducedMatrix(TridiagError, ValueError):
    pass


class ClusteredSpectrum(TridiagError, ArithmeticError):
    pass


class ResampleLimitExceeded(TridiagError, RuntimeError):
    pass
