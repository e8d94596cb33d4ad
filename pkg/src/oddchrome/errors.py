"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed input: bad vertex ids, bad partitions, unparsable files."""


class PreconditionError(ValueError):
    """An operation was called on a graph outside its domain."""


class NotInClassError(PreconditionError):
    """The input graph is not a subdivision of an odd graph."""


class DisconnectedError(PreconditionError):
    """The operation requires a connected graph."""


class ConstructionDivergence(RuntimeError):
    """A constructive step met a structure it was not built for.

    Callers that have an exact fallback catch this and continue; the
    message records which structural check failed.
    """


class BudgetExhausted(RuntimeError):
    """An exhaustive search hit its node budget before deciding."""
