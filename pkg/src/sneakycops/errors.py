"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all graph construction and analysis errors."""


class IsolatedVertexError(GraphError):
    """A vertex has no neighbor at all, not even itself via a loop."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is isolated")


class OutOfRangeError(GraphError):
    """An edge endpoint is outside 0..n-1."""

    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for n={n}")


class InvalidSpecError(GraphError):
    """A family spec has parameters outside its validity range."""


class ParseError(GraphError):
    """Malformed graph text; carries the offending line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SizeLimitExceededError(GraphError):
    """Graph too large for the exhaustive isomorphism search."""


class NotFoldableError(GraphError):
    """Requested fold pair does not satisfy the neighborhood condition."""


class InvalidUnfoldError(GraphError):
    """Requested unfold would not reverse into a valid fold."""


class SolverError(Exception):
    """Base class for game solving errors."""


class BudgetExceededError(SolverError):
    """State space larger than the configured budget."""

    def __init__(self, states: int, limit: int):
        self.states = states
        self.limit = limit
        super().__init__(f"state space of {states} states exceeds budget {limit}")


class CapExceededError(SolverError):
    """No cop count up to the cap admits a winning placement."""

    def __init__(self, cap: int, per_k: list):
        self.cap = cap
        self.per_k = per_k
        super().__init__(f"no winning placement for any k <= {cap}")


class NotWinningError(SolverError):
    """Placement does not defeat every robber start."""
