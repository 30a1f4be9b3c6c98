"""Exception taxonomy shared by all edgex modules.

Internal invariant errors are the "must never fire" class: they signal a bug
in this library (or a violated theorem), never bad user input, and map to a
dedicated CLI exit code.
"""


class EdgexError(Exception):
    """Base class for all edgex errors."""


class SelfLoopError(EdgexError):
    """An edge (i, i) was supplied."""


class DuplicateEdgeError(EdgexError):
    """The same unordered pair was supplied twice."""


class VertexIndexError(EdgexError):
    """A vertex index is outside 0..n-1."""


class UnknownEdgeError(EdgexError):
    """An edge does not exist in the host graph."""


class NotBipartiteError(EdgexError):
    """Raised with an odd cycle witness when a bipartition is impossible."""

    def __init__(self, odd_cycle):
        self.odd_cycle = list(odd_cycle)
        super().__init__(f"graph is not bipartite; odd cycle {self.odd_cycle}")


class BadParameterError(EdgexError):
    """A family constructor parameter is out of range."""


class OddOrderError(EdgexError):
    """A 1-factorization was requested for an odd-order complete graph."""


class ListTooShortError(EdgexError):
    """A color list is shorter than the Galvin engine requires."""


class DemandViolationError(EdgexError):
    """A color list is shorter than its edge's demand."""


class MissingEdgeError(EdgexError):
    """A coloring does not assign every edge of the graph."""


class InvalidPrecoloringError(EdgexError):
    """A precoloring fails validation; carries the full violation report."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class InapplicableError(EdgexError):
    """The adversarial construction's hypothesis fails for an input graph."""


class BudgetExceededError(EdgexError):
    """An exact search hit its node budget; the outcome is inconclusive."""

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


class InternalInvariantError(EdgexError):
    """A guaranteed-by-proof invariant failed: an edgex bug, not user error."""


class NoKernelError(InternalInvariantError):
    """An uncolored edge survived a round undominated by the stable matching."""


class TheoremViolationError(InternalInvariantError):
    """The exact solver refuted an instance the list-coloring theorem covers."""


class ProofInvariantError(InternalInvariantError):
    """A reduction or fiber-assembly invariant failed on validated input."""
