"""Exception types shared across the package."""


class TrisepError(Exception):
    """Base class for all package errors."""


class ArityError(TrisepError):
    """A predicate or function symbol is used with inconsistent arity."""


class ConstructionError(TrisepError):
    """A construction step violates a state invariant or precondition."""


class OracleError(TrisepError):
    """Brute-force oracle misuse: non-ground input, uncovered variable, cap exceeded."""


class ParseError(TrisepError):
    """Problem or trace text is malformed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)
