"""Exception hierarchy shared by all zehmix modules."""


class ZehmixError(ValueError):
    """Base class for every domain error raised by zehmix."""


class EmptyInput(ZehmixError):
    pass


class ZeroVector(ZehmixError):
    pass


class NotNormalized(ZehmixError):
    pass


class NotUnitVector(ZehmixError):
    pass


class NotHermitian(ZehmixError):
    pass


class DimensionMismatch(ZehmixError):
    pass


class EmptyEnsemble(ZehmixError):
    pass


class NegativeProbability(ZehmixError):
    """A member probability is below zero.

    ``index`` is the position of the offending member, when known.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ProbabilitySumNotOne(ZehmixError):
    pass


class NotADensityOperator(ZehmixError):
    pass


class NegativeEigenvalue(ZehmixError):
    pass


class NonAscendingTimes(ZehmixError):
    pass
