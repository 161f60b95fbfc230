"""Exception hierarchy.

Two families matter to callers: :class:`PreconditionError` (the inputs are
well formed but violate a documented precondition or parameter range) and
:class:`ParseError` (a representation file could not be read).  The CLI maps
them to exit codes 3 and 2.
"""


class RHError(Exception):
    """Base class for every error raised by this package."""


class ParseError(RHError):
    pass


class PreconditionError(RHError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class ShapeMismatch(PreconditionError):
    pass


class SpectrumNotRational(PreconditionError):
    pass


class UnsupportedEigenvalue(PreconditionError):
    """A local eigenvalue is not a root of unity."""


class NotAnEigenvalue(PreconditionError):
    pass


class SingularConjugator(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


class NotNilpotent(PreconditionError):
    pass


class NotUnipotent(PreconditionError):
    pass


class InvalidRepresentation(PreconditionError):
    pass


class HypothesisNotMet(PreconditionError):
    pass


class NonUnitProduct(PreconditionError):
    pass


class NoEigenspaceSplit(PreconditionError):
    pass


class NoSplitPoint(PreconditionError):
    pass


class NonIntegralDifference(PreconditionError):
    pass


class BadNuSum(PreconditionError):
    pass


class ZeroNu(PreconditionError):
    pass


class TooFewPunctures(PreconditionError):
    pass


class GenusTooSmall(PreconditionError):
    pass


class BadRankParity(PreconditionError):
    pass


class OutOfTheoremRange(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


class GenericityExhausted(RHError):
    pass
