"""Exception hierarchy shared by every crlab module."""


class CRLabError(Exception):
    """Base class for all errors raised by crlab."""


class UsageError(CRLabError, ValueError):
    """An operation was called with arguments that violate its contract."""


class InvariantError(UsageError):
    """A domain object failed one of its construction invariants."""

    def __init__(self, invariant, message, line=None):
        self.invariant = invariant
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{invariant}: {message}")


class ResourceLimitError(CRLabError, RuntimeError):
    """A configured degree / term / basis cap was exceeded.

    ``diagnostics`` carries whatever partial-progress information the raising
    routine had at hand (basis size so far, pairs processed, ...).
    """

    def __init__(self, message, **diagnostics):
        self.diagnostics = diagnostics
        if diagnostics:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(diagnostics.items()))
            message = f"{message} ({detail})"
        super().__init__(message)


class ParseError(UsageError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
