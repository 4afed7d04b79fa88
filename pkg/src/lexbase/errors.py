"""Shared exception types."""

from __future__ import annotations


class LexbaseError(Exception):
    """Base class for all toolkit errors."""


class DataError(LexbaseError):
    """Input data violates a contract (unknown genre, unreadable file, ...)."""


class ParseError(DataError):
    """A serialized artifact could not be parsed.

    Carries the 1-based line number and a source name when known, and
    prefixes both onto the message.
    """

    def __init__(self, message: str, *, source: str | None = None, line: int | None = None) -> None:
        self.source = source
        self.line = line
        if source is not None and line is not None:
            message = f"{source}:{line}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        elif source is not None:
            message = f"{source}: {message}"
        super().__init__(message)
