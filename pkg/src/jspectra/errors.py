"""Exception hierarchy.

Every error raised on purpose by the library derives from ``JSpectraError``;
precondition failures additionally derive from ``ValueError`` and numerical
failures from ``ArithmeticError`` so generic handlers keep working.
"""


class JSpectraError(Exception):
    pass


class InputError(JSpectraError, ValueError):
    """A precondition on the arguments is violated."""


class NumericalError(JSpectraError, ArithmeticError):
    """The computation ran but could not produce a trustworthy result."""


# numkernel
class NonSquare(InputError):
    pass


class NotSymmetric(InputError):
    pass


class EmptyInput(InputError):
    pass


class NoConvergence(NumericalError):
    pass


# model
class DimensionMismatch(InputError):
    pass


# enclosure
class InvalidBound(InputError):
    pass


class EmptyGrid(InputError):
    pass


# qnr
class ZeroVector(InputError):
    pass


class DimensionTooSmall(InputError):
    pass


class LambdaInSpectrumD(InputError):
    pass


class BstarXZero(InputError):
    pass


# schur
class TooCloseToSigmaD(InputError):
    pass


class LambdaNotAboveDeltaPlus(InputError):
    pass


class IntervalNotAboveMu(InputError):
    pass


class NonNegativeC(NumericalError):
    pass


class SingularSchur(NumericalError):
    pass


# vareig
class IndexOutOfRange(InputError):
    pass


class IndexExceedsNu(InputError):
    pass


class NotOrthonormal(InputError):
    pass


class NoEigenvalue(NumericalError):
    pass


class MaxIterations(NumericalError):
    pass


# krein
class StrictANotSatisfied(InputError):
    pass


class GammaOutsideGap(InputError):
    pass


# examples
class GridTooSmall(InputError):
    pass


class NegativeWeight(InputError):
    pass
