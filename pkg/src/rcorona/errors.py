"""Exception types shared across the package."""


class GraphValidationError(ValueError):
    """A graph construction input violates the basic shape rules."""


class EndpointRangeError(GraphValidationError):
    """An edge endpoint is outside 0..n-1."""


class SelfLoopError(GraphValidationError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphValidationError):
    """The same unordered edge appears more than once."""


class HypothesisError(ValueError):
    """A mathematical precondition of an operation is violated.

    Raised for things like a disconnected base graph, a non-regular input
    where regularity is required, an isolated vertex, or the unsupported
    m < n regime of the closed-form spectrum.
    """


class PoleError(ValueError):
    """A rational expression was evaluated at its pole."""


class ConvergenceError(RuntimeError):
    """The eigenvalue iteration failed to converge within its cap."""


class InternalConsistencyError(RuntimeError):
    """A polynomial produced by the closed form yielded fewer real roots
    than its degree; signals an implementation bug, not a user error."""
