"""
Error types raised by polybohr
"""


class PolyBohrError(Exception):
    """Base class of every error raised on purpose by the package"""


class ArgumentError(PolyBohrError, ValueError):
    """Raised when an argument is invalid or two arguments do not fit together"""


class AlphabetMismatchError(ArgumentError):
    """Raised when words or multiwords over different alphabets are combined"""


class DomainPointError(ArgumentError):
    """Raised when a point lies on or outside the boundary of the polyball"""


class CapExceededError(PolyBohrError):
    """Raised when a configured size cap would be exceeded"""


class EnumerationCapError(CapExceededError):
    """Raised when a word set would exceed ENUMERATION_CAP elements"""


class DimensionCapError(CapExceededError):
    """Raised when a truncated space or coefficient space would be too large"""


class TruncationTooSmallError(PolyBohrError):
    """Raised when a truncation cannot represent every term of a polynomial"""


class NotHermitianError(PolyBohrError):
    """Raised when a Hermitian matrix was required"""


class ConvergenceError(PolyBohrError):
    """Raised when an iterative method fails to reach the requested tolerance"""


class MonotonicityError(PolyBohrError):
    """Raised when a bisection target is not strictly increasing on its bracket"""


class NonToeplitzError(PolyBohrError):
    """Raised when coefficients cannot reproduce a matrix as a multi-Toeplitz operator"""


class PolynomialFileError(PolyBohrError):
    """Raised when a polynomial file cannot be read or is malformed"""
