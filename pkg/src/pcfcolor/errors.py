"""Exception hierarchy shared by all solvers."""


class PCFError(Exception):
    """Base class for errors raised by this package."""


class FormatError(PCFError, ValueError):
    """Malformed graph, list-assignment, or coloring text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(PCFError, ValueError):
    """The input does not satisfy a solver's documented preconditions."""


class NotColorable(PCFError):
    """No proper conflict-free coloring exists from the given lists."""


class InternalContradiction(PCFError, RuntimeError):
    """A step that always succeeds on valid input has failed.

    Solvers catch this, record it in their trace, and fall back to the
    exhaustive oracle; tests treat any recorded instance as a failure.
    """


class ResourceLimit(PCFError):
    """The exhaustive oracle hit its node limit before reaching a verdict."""
