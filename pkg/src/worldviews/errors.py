"""Exception hierarchy shared by the whole package."""


class WorldViewError(Exception):
    """Base class for all package errors."""


class ParseError(WorldViewError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class UnsupportedConstruct(WorldViewError):
    """The input uses a construct the requested operation does not handle."""


class CapExceeded(WorldViewError):
    """A configured resource cap (atoms, guesses, candidates) was exceeded."""
