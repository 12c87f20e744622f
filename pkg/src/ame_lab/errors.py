"""Exception hierarchy shared by every module of the package."""


class AmeLabError(ValueError):
    """Base class for all package errors."""


class NotSquare(AmeLabError):
    pass


class NotHermitian(AmeLabError):
    pass


class NotUnitary(AmeLabError):
    pass


class DimensionMismatch(AmeLabError):
    pass


class QubitOutOfRange(AmeLabError):
    pass


class IndexOutOfRange(AmeLabError):
    pass


class EmptySubset(AmeLabError):
    pass


class MOutOfRange(AmeLabError):
    pass


class ParamOutOfRange(AmeLabError):
    pass


class NotPSD(AmeLabError):
    """Raised when a density matrix carries an eigenvalue clearly below zero.

    Small negative eigenvalues from rounding are tolerated; anything past the
    clamping threshold points at a bug in channel application.
    """

    def __init__(self, message: str, min_eigenvalue: float):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue
