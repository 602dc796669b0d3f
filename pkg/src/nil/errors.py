"""Shared exception types."""


class GraphError(ValueError):
    """Invalid graph construction or a graph-operation precondition failure."""


class IdealError(ValueError):
    """Invalid monomial-ideal data or operation arguments."""


class GraphFileError(ValueError):
    """Unparseable graph file; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimitError(RuntimeError):
    """A configured resource budget (box volume, pivot cap, cycle cap) was hit.

    Budgets fail loudly instead of degrading; the message names the bound.
    """
