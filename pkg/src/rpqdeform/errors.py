"""Exception types shared across the package."""


class RpqError(Exception):
    """Base class for all errors raised by rpqdeform."""


class ZeroDenominator(RpqError, ZeroDivisionError):
    pass


class SingularParameters(RpqError):
    """The scheme (or one of its closed forms) is singular at these parameters."""


class NegativeArgument(RpqError, ValueError):
    pass


class OutOfRange(RpqError, ValueError):
    pass


class MissingPhiTriple(RpqError):
    pass


class ZeroPhi(RpqError):
    pass


class UnsupportedScheme(RpqError):
    pass


class NotPalindromic(RpqError):
    pass


class NonPositiveSpectrum(RpqError):
    pass


class DomainError(RpqError, ValueError):
    """Raised for parameter-domain violations when strict checking is requested."""


class SchemeError(RpqError, ValueError):
    """Malformed scheme definition (bad JSON, R(1,1) != 0, h(1,1) != 1, ...)."""
