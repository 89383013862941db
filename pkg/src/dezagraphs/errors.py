"""Exception hierarchy shared by every module of the package."""


class DezaGraphError(Exception):
    """Base class for all errors raised by :mod:`dezagraphs`."""


class InvalidArgument(DezaGraphError, ValueError):
    """An argument violates an operation's precondition."""


class InfeasibleParameters(DezaGraphError, ValueError):
    """A parameter tuple does not describe any graph."""


class ConstructionError(DezaGraphError):
    """A construction's preconditions failed; the message names the failed condition."""


class SearchBoundExceeded(DezaGraphError):
    """The graph is larger than the configured search bound."""


class Graph6Error(DezaGraphError, ValueError):
    """Malformed graph6 input."""
