"""Exception hierarchy for pnorm."""


class PnormError(Exception):
    """Base class for all errors raised by this package."""


class WeightUndefinedError(PnormError, ValueError):
    """A custom weight sequence does not cover every part size requested."""


class CacheError(PnormError, OSError):
    """Problem reading or writing a coefficient cache file."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path

    def __str__(self):
        msg = super().__str__()
        return f"{self.path}: {msg}" if self.path is not None else msg


class MalformedCacheError(CacheError):
    """Cache file has a bad header, wrong weight tag, or non-integer tokens."""


class StaleCacheError(CacheError):
    """Cache file holds fewer coefficients than requested."""


class PrecisionInfeasibleError(PnormError, ValueError):
    """Requested decimal accuracy exceeds what the working precision supports."""


class NonRealResultError(PnormError, ArithmeticError):
    """An evaluation that must be real left a non-negligible imaginary part."""
