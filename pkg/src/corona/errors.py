"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class CoronaError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(CoronaError, ValueError):
    """A graph description violates a parameter range or is malformed."""


class ParseError(SpecError):
    """The graph DSL text could not be parsed."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class CapacityError(CoronaError):
    """An exact search was asked to run on an instance above its size cap."""


class NeedsOracleError(CoronaError):
    """No closed form applies and oracle evaluation was not allowed."""
