"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input (self-loop, parallel edge, bad vertex id)."""


class EmptyGraph(GraphError):
    """An edge was requested from a graph with no edges."""


class UnknownEdge(KeyError):
    """Edge id does not exist or is currently removed."""


class NotKDegenerate(ValueError):
    """The graph does not satisfy the k-degeneracy needed by the caller."""


class KTooSmall(ValueError):
    """The large-k colorer requires k >= 4."""


class PropernessViolation(ValueError):
    """Assigning this color would put two equal colors at one vertex."""


class EdgeAlreadyColored(ValueError):
    """Candidate queries are only defined for uncolored edges."""


class UncoloredEdge(ValueError):
    """Operation needs a colored edge."""


class NotACandidate(ValueError):
    """Validity queries are only defined for candidate colors."""


class ImproperColoring(ValueError):
    """Defensive: a traversal found a state that contradicts properness."""


class ExtensionFailed(RuntimeError):
    """A guaranteed extension witness was not found.

    Unreachable on valid inputs; raised with a diagnostic payload so the
    offending state can be reproduced.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class MaxColorsExceeded(RuntimeError):
    """The exact search exhausted its color budget without a coloring."""


class BadSpec(ValueError):
    """Generator parameters out of range."""
