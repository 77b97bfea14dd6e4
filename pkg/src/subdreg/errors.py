"""Exception hierarchy shared by all modules."""


class SubdivisionError(Exception):
    """Base class for every error raised by subdreg."""


class InputError(SubdivisionError, ValueError):
    """Malformed or out-of-range input (bad mask, bad parameters)."""


class ConvergenceConditionError(InputError):
    """The symbol violates a(1) = 2, a(-1) = 0."""


class NotSymmetric(InputError):
    """No palindromic center exists for the coefficient sequence."""


class OddCenter(InputError):
    """The sequence is palindromic about a half-integer exponent."""


class NotDivisible(InputError):
    """Exact division by a power of (1 + z) is impossible."""


class ZeroPolynomial(InputError):
    pass


class DegenerateBSpline(SubdivisionError):
    """p = 0: no transition matrix exists, the caller should use rho = 1."""


class MethodInapplicable(SubdivisionError):
    """The spectral-radius method does not apply (B indefinite, rho out of range)."""


class OutOfTheoremRange(MethodInapplicable):
    """rho < 1/2."""


class ReductionWindowExceeded(MethodInapplicable):
    """rho >= 2**r, so no regularity statement follows."""


class EnclosureTooWide(SubdivisionError):
    """The certified enclosure of rho is wider than requested.

    ``estimate`` and ``radius_bound`` carry the best-effort result.
    """

    def __init__(self, message, estimate=None, radius_bound=None):
        super().__init__(message)
        self.estimate = estimate
        self.radius_bound = radius_bound
