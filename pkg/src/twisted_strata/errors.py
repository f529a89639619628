"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class StrataError(Exception):
    """Base class for all errors raised by twisted_strata."""


class UnsupportedType(StrataError):
    pass


class ParseError(StrataError, ValueError):
    """Malformed label text. ``position`` is the 0-based offending index."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class UnknownLabel(StrataError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class UnknownLevi(UnknownLabel):
    pass


class UnknownD(UnknownLabel):
    pass


class UnknownStratum(UnknownLabel):
    pass


class MissingPlugin(StrataError):
    pass


class InvalidParam(StrataError, ValueError):
    pass


class PluginLawError(StrataError):
    pass


class TableInconsistency(StrataError):
    """The evaluation rules disagree with the golden table."""
