"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SeriesError(ValueError):
    """Base class for all errors raised by this package."""


class OrderMismatchError(SeriesError):
    pass


class NonInvertibleError(SeriesError):
    pass


class RationalParseError(SeriesError):
    pass


class PreconditionError(SeriesError):
    """A caller-checked hypothesis does not hold.

    ``witness`` is the first offending index when one exists.
    """

    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness
