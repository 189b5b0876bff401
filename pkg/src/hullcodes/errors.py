"""Exception types raised across the package."""


class CodingError(Exception):
    """Base class for every error raised by hullcodes."""


# finite fields
class NonPrimeCharacteristic(CodingError, ValueError):
    pass


class ReducibleModulus(CodingError, ValueError):
    pass


class UnsupportedOrder(CodingError, ValueError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class FieldMismatch(CodingError, ValueError):
    pass


class NoHermitianStructure(CodingError, ValueError):
    pass


class OddCharacteristic(CodingError, ValueError):
    pass


class ZeroInput(CodingError, ValueError):
    pass


# matrices
class DimensionMismatch(CodingError, ValueError):
    pass


class LengthMismatch(CodingError, ValueError):
    pass


class NotSquare(CodingError, ValueError):
    pass


# codes
class BudgetExceeded(CodingError):
    def __init__(self, needed, cap):
        super().__init__(f"enumeration needs {needed} codewords, cap is {cap}")
        self.needed = needed
        self.cap = cap


class ZeroDimensional(CodingError, ValueError):
    pass


class NotBinary(CodingError, ValueError):
    pass


class DistanceUnknown(CodingError):
    pass


class NotAPermutation(CodingError, ValueError):
    pass


class InternalCrossCheckFailure(CodingError, AssertionError):
    """Two independent computations of the same quantity disagree."""


# constructions
class NotEvenLike(CodingError, ValueError):
    pass


class NotApplicable(CodingError, ValueError):
    pass


class NotLCD(CodingError, ValueError):
    pass


class OddN(CodingError, ValueError):
    pass


class UnsupportedKind(CodingError, ValueError):
    pass


# GRS
class DuplicatePoints(CodingError, ValueError):
    pass


class ZeroScalar(CodingError, ValueError):
    pass


class ExtendedNotSupported(CodingError, ValueError):
    pass


class ParameterOutOfRange(CodingError, ValueError):
    pass


class SelfCheckFailed(CodingError, AssertionError):
    pass


class RowMismatch(CodingError):
    pass


# FSD
class HalfLengthMismatch(CodingError, ValueError):
    pass


class BudgetZero(CodingError, ValueError):
    pass


class SeedMissing(CodingError, ValueError):
    pass


# I/O
class ParseError(CodingError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
