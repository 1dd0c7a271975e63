"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class QMainError(Exception):
    """Base class for every error raised by :mod:`qmain`."""


class InvalidEdge(QMainError, ValueError):
    pass


class DuplicateEdge(QMainError, ValueError):
    pass


class ParseError(QMainError, ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the 0-based byte position of the offending character,
    or ``None`` when the error is not tied to one position.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Unsupported(QMainError, ValueError):
    pass


class NotATree(QMainError, ValueError):
    pass


class NotUnicyclic(QMainError, ValueError):
    pass


class NotConnected(QMainError, ValueError):
    pass


class NotSymmetric(QMainError, ValueError):
    pass


class InvalidParameter(QMainError, ValueError):
    pass


class ConsistencyViolation(QMainError, AssertionError):
    def __init__(self, quantity: str, observed: float, expected: float):
        super().__init__(f"{quantity}: observed {observed!r}, expected {expected!r}")
        self.quantity = quantity
        self.observed = observed
        self.expected = expected


class BudgetExceeded(QMainError, ValueError):
    pass


class TheoremViolation(QMainError, AssertionError):
    """Enumeration disagrees with a classification theorem.

    ``extra`` and ``missing`` hold graph6 strings of the witnesses.
    """

    def __init__(self, message: str, n: int, extra=(), missing=()):
        self.n = n
        self.extra = list(extra)
        self.missing = list(missing)
        detail = message
        if self.extra:
            detail += f"; unexpected: {', '.join(self.extra)}"
        if self.missing:
            detail += f"; missing: {', '.join(self.missing)}"
        super().__init__(detail)
