"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(GraphError):
    """A vertex id is outside 0..n-1 for the graph at hand."""


class FormatError(GraphError):
    """Malformed input file (edge list, graph6, or build script)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotUnicyclicError(GraphError):
    """The graph does not have exactly one cycle where one was required."""


class LimitExceededError(GraphError):
    """An exact exponential computation was requested beyond its size limit."""


class PreconditionError(GraphError):
    """An operation's documented precondition does not hold."""


class PartitionError(GraphError):
    """A claimed bipartition is violated by some edge."""


class ScriptError(FormatError):
    """A build script step is invalid (e.g. leaf attached to a non-red vertex)."""
