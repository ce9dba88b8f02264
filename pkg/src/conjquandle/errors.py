"""Exception types shared across the package."""

from __future__ import annotations


class QuandleError(Exception):
    """Base class for all errors raised by conjquandle."""


# permutations

class MalformedCycle(QuandleError, ValueError):
    pass


class PointOutOfRange(QuandleError, ValueError):
    pass


class RepeatedPoint(QuandleError, ValueError):
    pass


class DegreeMismatch(QuandleError, ValueError):
    pass


# groups

class BoundExceeded(QuandleError):
    """An enumeration would produce more elements than the configured bound."""

    def __init__(self, bound: int, what: str = "enumeration"):
        self.bound = bound
        self.what = what
        super().__init__(f"{what} exceeds enumeration bound {bound}")


class UnknownFamily(QuandleError, ValueError):
    pass


class ParameterOutOfRange(QuandleError, ValueError):
    pass


class NotAnElement(QuandleError, ValueError):
    pass


class GroupFileError(QuandleError, ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


# quandles

class EmptyGround(QuandleError, ValueError):
    pass


class NotClosed(QuandleError, ValueError):
    def __init__(self, a, b, message: str):
        self.witness = (a, b)
        super().__init__(message)


class NotAMember(QuandleError, ValueError):
    pass


# checks

class DegreeTooSmall(QuandleError, ValueError):
    pass


class ConstructionPostconditionFailed(QuandleError, AssertionError):
    """Raised when the symmetric-group witness construction produces a bad z.

    This signals a bug, never a legitimate outcome.
    """


class EquivalenceViolation(QuandleError, AssertionError):
    pass


class PreconditionFailed(QuandleError, ValueError):
    pass
