"""Exception types shared across the package."""


class MinorgapError(Exception):
    """Base class for all library errors."""


class OutOfRange(MinorgapError):
    """Vertex count or endpoint outside the supported range."""


class LoopEdge(MinorgapError):
    """An edge (v, v) was supplied."""


class BadParams(MinorgapError):
    """Parameters outside the valid domain of an operation or family."""


class NotAClique(MinorgapError):
    """Clique-sum attachment vertices do not induce a clique."""


class SizeMismatch(MinorgapError):
    """Clique-sum attachment lists have different lengths."""


class NoSuchEdge(MinorgapError):
    """The named edge is not present in the graph."""


class MalformedGraph6(MinorgapError):
    """Input bytes are not valid graph6."""


class TooLarge(MinorgapError):
    """Request exceeds a cost guard; pass an override to force it."""


class NotConnected(MinorgapError):
    """Operation requires a connected graph."""


class TooSmall(MinorgapError):
    """Graph has too few vertices for this operation."""


class PreconditionUnmet(MinorgapError):
    """A structural precondition (e.g. connectivity class) does not hold."""


class NotCoprime(MinorgapError):
    """Frobenius decomposition needs coprime coefficients."""


class BelowFrobenius(MinorgapError):
    """No non-negative representation exists at or below the Frobenius number."""


class NotFree(MinorgapError):
    """Certification failed: the graph already has a forbidden minor."""

    def __init__(self, minor_index, model):
        super().__init__(f"graph has forbidden minor #{minor_index}")
        self.minor_index = minor_index
        self.model = model


class NotMaximal(MinorgapError):
    """Certification failed: some non-edge can be added without creating a minor."""

    def __init__(self, non_edge):
        super().__init__(f"non-edge {non_edge} can be added freely")
        self.non_edge = non_edge


class EdgeCountMismatch(MinorgapError):
    """Constructed graph does not match its predicted edge count."""
