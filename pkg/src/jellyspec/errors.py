"""Exception hierarchy shared by all jellyspec modules."""

from __future__ import annotations


class JellyspecError(Exception):
    """Base class for every error raised by this package."""


class GraphError(JellyspecError, ValueError):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class InvalidParams(GraphError):
    pass


class Disconnected(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class NoEdges(GraphError):
    pass


class NotSymmetric(JellyspecError, ValueError):
    pass


class NoConvergence(JellyspecError, ArithmeticError):
    pass


class NotProperSubgraph(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class InternalInconsistency(JellyspecError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class CapExceeded(JellyspecError, ValueError):
    """Requested order exceeds the configured enumeration cap."""
