"""Exception hierarchy shared by all cminor modules."""


class CminorError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(CminorError, ValueError):
    """An operation was called with arguments violating its contract."""


class ParseError(CminorError, ValueError):
    """A matrix document or factorization string could not be parsed."""


class SizeGuardError(CminorError):
    """An input exceeds the configured size cap for an exponential computation."""


class OracleMismatchError(CminorError):
    """The expansion engine and the brute-force oracle disagree.

    This is the cross-validation alarm: it indicates a bug, never bad input.
    """
