"""Exception hierarchy."""


class QuadSGError(Exception):
    """Base class for library errors."""


class PreconditionError(QuadSGError, ValueError):
    """An operation was called on inputs outside its contract."""


class ResourceLimitExceeded(QuadSGError):
    """A configured budget ran out before a decision was reached.

    This is an "undecided" outcome and never means "no".
    """


class NotDivisibleError(QuadSGError, ArithmeticError):
    """Exact polynomial division was requested but the divisor does not divide."""
