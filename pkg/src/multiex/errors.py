"""Exception types shared across the package."""


class ExtremalError(ValueError):
    """Base class for invalid-input errors."""


class InvalidSize(ExtremalError):
    """A part size is not a positive integer."""


class InvalidArity(ExtremalError):
    """Too few (or the wrong number of) parts for the requested operation."""


class OutOfRange(ExtremalError):
    """Parameters fall outside the hypotheses an operation requires."""


class NotAnEdge(ExtremalError):
    """An edge removal named a pair that is not currently an edge."""


class BudgetExceeded(RuntimeError):
    """The exact search ran out of nodes or time before concluding.

    ``lower`` and ``upper`` bracket the extremal number; ``nodes_explored``
    counts search nodes visited before giving up.
    """

    def __init__(self, message, *, lower, upper, nodes_explored):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes_explored = nodes_explored
