"""Exception types raised across the package."""


class FermatqError(Exception):
    """Base class for all fermatq errors."""


class NotPrimeError(FermatqError, ValueError):
    """The modulus is composite, even, or below 3."""


class MissingPrimitiveRootError(FermatqError, ValueError):
    """An operation needs a primitive root but the context carries none."""


class BadParameterError(FermatqError, ValueError):
    """A numeric parameter is outside its documented range."""


class NotCoprimeError(FermatqError, ValueError):
    """An argument shares a factor with the modulus where coprimality is required."""


class BadCoefficientsError(FermatqError, ValueError):
    """Every exponential-sum coefficient vanishes modulo p."""


class TooLongError(FermatqError, ValueError):
    """A requested summation length exceeds the implementation cap."""


class DimensionUnsupportedError(FermatqError, ValueError):
    """Exact discrepancy is not implemented for this dimension."""


class ParamRangeError(FermatqError, ValueError):
    """Hash parameters are outside their documented ranges."""


class CacheCorruptError(FermatqError):
    """A results cache file has an unexpected schema or policy."""
