"""Exceptions shared across the toolkit, each carrying a CLI exit code."""


class MatroptError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ParseError(MatroptError):
    """Malformed input file; carries line/column context where known."""

    exit_code = 2

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DimensionError(MatroptError):
    """Mismatched sizes between a matroid, weights, points, or objectives."""

    exit_code = 3


class CapError(MatroptError):
    """A configurable enumeration cap was exceeded."""

    exit_code = 4


class InternalInconsistencyError(MatroptError):
    """Two routes that must agree disagreed; never ignored silently."""

    exit_code = 5
