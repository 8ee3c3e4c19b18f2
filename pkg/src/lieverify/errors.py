"""Exception hierarchy shared by every module of the package."""


class LieVerifyError(Exception):
    """Base class for all errors raised by lieverify."""


class InvalidParameters(LieVerifyError, ValueError):
    pass


class NonUnitConstantTerm(LieVerifyError, ArithmeticError):
    pass


class NonPrimeModulus(InvalidParameters):
    pass


class DimensionMismatch(LieVerifyError, ValueError):
    pass


class ModulusMismatch(LieVerifyError, ValueError):
    pass


class UnknownGenerator(LieVerifyError, KeyError):
    pass


class NegativeDimension(LieVerifyError, ArithmeticError):
    """Peeling hit a negative generator count: the input is not the
    Hilbert series of any graded enveloping algebra at that degree."""

    def __init__(self, degree, value):
        super().__init__(f"negative generator count {value} at degree {degree}")
        self.degree = degree
        self.value = value


class CapTooLarge(LieVerifyError):
    """The word count in some degree exceeds the oracle guard."""

    def __init__(self, degree, words, guard):
        super().__init__(
            f"degree {degree} has {words} words, above the guard of {guard}"
        )
        self.degree = degree
        self.words = words
        self.guard = guard


class DegreeTooSmall(InvalidParameters):
    pass


class InvalidDifferential(LieVerifyError, ValueError):
    pass
