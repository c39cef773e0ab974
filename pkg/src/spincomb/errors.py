"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all graph/combinatorics errors."""


class BadIndexError(GraphError):
    """A vertex or edge index is out of range."""

    def __init__(self, index, bound):
        self.index = index
        self.bound = bound
        super().__init__(f"index {index!r} out of range (bound {bound})")


class IsolatedVertexError(GraphError):
    """A constructed graph would contain an isolated vertex."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is isolated")


class WidthMismatchError(GraphError):
    """Bit-vector widths of two operands disagree."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"bit widths differ: {left} vs {right}")


class CapExceededError(GraphError):
    """Enumerating the cycle space would take more than 2^cap steps."""

    def __init__(self, betti: int, cap: int):
        self.betti = betti
        self.cap = cap
        super().__init__(f"cycle space has dimension {betti}, above cap {cap}")


class NotCyclicError(GraphError):
    """An edge subset has a vertex of odd valency."""


class WrongValencyError(GraphError):
    """A local operation was applied at a vertex of the wrong valency."""

    def __init__(self, vertex: int, valency: int, wanted: int):
        self.vertex = vertex
        self.valency = valency
        super().__init__(
            f"vertex {vertex} has valency {valency}, operation needs {wanted}"
        )


class LoopVertexError(GraphError):
    """Valency-2 smoothing is not allowed on the vertex of a loop."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} carries a loop")


class NotSeparatingError(GraphError):
    """Edge contraction requires a separating edge."""

    def __init__(self, edge: int):
        self.edge = edge
        super().__init__(f"edge {edge} is not separating")


class VanishingComponentError(GraphError):
    """A tree component has no superstable core to reduce to."""


class NotSuperstableError(GraphError):
    """A theorem check requires a superstable input graph."""


class TooLargeError(GraphError):
    """The input exceeds the brute-force size bounds of this module."""


class NotEvenError(GraphError):
    """The node subset is not even; no spin support exists over it."""


class PreconditionFailedError(GraphError):
    """A corollary check was invoked outside its stated hypotheses."""


class InternalLengthMismatchError(GraphError):
    """Internal consistency failure: computed length differs from 2^(2g)."""

    def __init__(self, length: int, expected: int):
        self.length = length
        self.expected = expected
        super().__init__(f"length {length} != expected {expected}")


class CurveFileError(Exception):
    """Base class for curve-file parsing errors."""


class ParseError(CurveFileError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class UnknownVertexError(CurveFileError):
    def __init__(self, line: int, name: str):
        self.line = line
        self.name = name
        super().__init__(f"line {line}: unknown vertex {name!r}")


class DuplicateNameError(CurveFileError):
    def __init__(self, line: int, name: str):
        self.line = line
        self.name = name
        super().__init__(f"line {line}: duplicate name {name!r}")
