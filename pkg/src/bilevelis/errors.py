"""Exception types shared across the toolkit."""


class SolverError(Exception):
    """Base class for every error raised by this package."""


class BottleneckOfEmptySet(SolverError):
    """A bottleneck objective was evaluated on an empty selection."""


class UnknownId(SolverError):
    """An id refers to no vertex or interval of the instance."""


class NotBipartite(SolverError):
    """A subgraph that must admit a two-coloring does not."""


class EmptyRestrict(SolverError):
    """A nonempty selection was requested from an empty candidate set."""


class Infeasible(SolverError):
    """No feasible leader action / follower reaction pair exists."""


class OracleUnavailable(SolverError):
    """No polynomial follower oracle covers this variant on this instance."""


class CapExceeded(SolverError):
    """The instance is larger than the configured brute-force cap."""


class MalformedClause(SolverError):
    """A clause does not consist of exactly three literals."""


class IndexOutOfRange(SolverError):
    """A dynamic-programming index lies outside its valid range."""


class CorruptTables(SolverError):
    """Backtracking records contradict the stored optimum values."""


class BadParameter(SolverError):
    """A generator or CLI parameter is outside its allowed range."""
