"""Multigraph representation and structural primitives.

Vertices and edges carry dense integer indices; edge subsets and vertex
subsets are int bitmasks wrapped with an explicit width so that GF(2)
arithmetic stays constant-time and width errors fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import BadIndexError, IsolatedVertexError, WidthMismatchError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """An undirected multigraph; loops and parallel edges allowed.

    Immutable after construction.  ``edges[i]`` is the normalized
    (min, max) endpoint pair of edge i.  Use :func:`build_graph` for
    validated construction; transforms may build degenerate graphs
    (isolated vertices, even the empty graph) directly.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incidence(self) -> List[List[Tuple[int, int]]]:
        """Per-vertex list of (edge index, other endpoint); loops appear once."""
        inc: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (a, b) in enumerate(self.edges):
            inc[a].append((eid, b))
            if a != b:
                inc[b].append((eid, a))
        return inc


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edges as a 1-chain over GF(2); XOR is chain addition."""

    bits: int
    width: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise BadIndexError(self.bits, 1 << self.width)

    @classmethod
    def empty(cls, width: int) -> "EdgeSubset":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "EdgeSubset":
        return cls((1 << width) - 1, width)

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> "EdgeSubset":
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise BadIndexError(i, width)
            bits |= 1 << i
        return cls(bits, width)

    def __xor__(self, other: "EdgeSubset") -> "EdgeSubset":
        if self.width != other.width:
            raise WidthMismatchError(self.width, other.width)
        return EdgeSubset(self.bits ^ other.bits, self.width)

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.width and bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def indices(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def intersects(self, other: "EdgeSubset") -> bool:
        return bool(self.bits & other.bits)


@dataclass(frozen=True)
class ZeroChain:
    """A set of vertices as a 0-chain over GF(2)."""

    bits: int
    width: int

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "ZeroChain") -> "ZeroChain":
        if self.width != other.width:
            raise WidthMismatchError(self.width, other.width)
        return ZeroChain(self.bits ^ other.bits, self.width)


def build_graph(vertex_count: int, edge_pairs: Sequence[Edge]) -> Multigraph:
    """Validated constructor: rejects bad indices and isolated vertices."""
    if vertex_count < 0:
        raise BadIndexError(vertex_count, 0)
    touched = [False] * vertex_count
    edges: List[Edge] = []
    for pair in edge_pairs:
        a, b = pair
        if not (0 <= a < vertex_count and 0 <= b < vertex_count):
            raise BadIndexError(pair, vertex_count)
        touched[a] = touched[b] = True
        edges.append((a, b) if a <= b else (b, a))
    for v, seen in enumerate(touched):
        if not seen:
            raise IsolatedVertexError(v)
    return Multigraph(vertex_count, tuple(edges))


def valency(g: Multigraph, v: int) -> int:
    """Edge-endpoint incidences at v; a loop counts 2."""
    if not 0 <= v < g.vertex_count:
        raise BadIndexError(v, g.vertex_count)
    total = 0
    for a, b in g.edges:
        if a == v:
            total += 1
        if b == v:
            total += 1
    return total


def _incident_edges(g: Multigraph, v: int) -> List[int]:
    return [eid for eid, (a, b) in enumerate(g.edges) if a == v or b == v]


def connected_components(g: Multigraph) -> List[List[int]]:
    """Partition of vertex indices into maximal connected pieces."""
    inc = g.incidence()
    seen = [False] * g.vertex_count
    blocks: List[List[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        block = [start]
        while stack:
            u = stack.pop()
            for _, w in inc[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    stack.append(w)
        blocks.append(sorted(block))
    return blocks


def betti_number(g: Multigraph) -> int:
    """First Betti number: edges - vertices + components."""
    return g.edge_count - g.vertex_count + len(connected_components(g))


def separating_edges(g: Multigraph) -> EdgeSubset:
    """Bridges, found by lowpoint DFS.  Loops and parallel pairs never qualify."""
    n = g.vertex_count
    inc = g.incidence()
    pre = [-1] * n
    low = [0] * n
    bits = 0
    counter = 0

    # Iterative DFS; the edge id used to enter a vertex is skipped exactly
    # once so that a parallel copy still acts as a back edge.
    for root in range(n):
        if pre[root] != -1:
            continue
        stack: List[Tuple[int, int, int]] = [(root, -1, 0)]
        pre[root] = low[root] = counter
        counter += 1
        while stack:
            u, entry_eid, i = stack.pop()
            if i < len(inc[u]):
                stack.append((u, entry_eid, i + 1))
                eid, w = inc[u][i]
                if w == u or eid == entry_eid:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
                else:
                    low[u] = min(low[u], pre[w])
            elif entry_eid != -1:
                a, b = g.edges[entry_eid]
                parent = a if pre[a] < pre[b] else b
                low[parent] = min(low[parent], low[u])
                if low[u] > pre[parent]:
                    bits |= 1 << entry_eid
    return EdgeSubset(bits, g.edge_count)


def separating_vertices(g: Multigraph) -> List[int]:
    """Articulation vertices; deletion removes the vertex and incident edges."""
    n = g.vertex_count
    inc = g.incidence()
    pre = [-1] * n
    low = [0] * n
    result = set()
    counter = 0
    for root in range(n):
        if pre[root] != -1:
            continue
        root_children = 0
        stack: List[Tuple[int, int, int]] = [(root, -1, 0)]
        pre[root] = low[root] = counter
        counter += 1
        while stack:
            u, entry_eid, i = stack.pop()
            if i < len(inc[u]):
                stack.append((u, entry_eid, i + 1))
                eid, w = inc[u][i]
                if w == u or eid == entry_eid:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, eid, 0))
                else:
                    low[u] = min(low[u], pre[w])
            elif entry_eid != -1:
                a, b = g.edges[entry_eid]
                parent = a if pre[a] < pre[b] else b
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= pre[parent]:
                    result.add(parent)
        if root_children >= 2:
            result.add(root)
    return sorted(result)


def induced_subgraph(g: Multigraph, s: EdgeSubset) -> Multigraph:
    """Smallest subgraph containing the edges of s.

    Vertices are exactly the endpoints of s, reindexed in increasing
    order; the empty subset yields the empty graph (Betti number 0).
    """
    if s.width != g.edge_count:
        raise WidthMismatchError(s.width, g.edge_count)
    chosen = list(s.indices())
    verts = sorted({v for eid in chosen for v in g.edges[eid]})
    remap = {v: i for i, v in enumerate(verts)}
    edges = tuple((remap[g.edges[eid][0]], remap[g.edges[eid][1]]) for eid in chosen)
    return Multigraph(len(verts), edges)


def subset_betti(g: Multigraph, s: EdgeSubset) -> int:
    """Betti number of the subgraph induced by s, without materializing it."""
    if s.width != g.edge_count:
        raise WidthMismatchError(s.width, g.edge_count)
    return _bits_betti(g, s.bits)


def _bits_betti(g: Multigraph, bits: int) -> int:
    """Internal fast path: betti of the subgraph induced by an edge bitmask."""
    parent: dict = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_edges = 0
    n_comp = 0
    edges = g.edges
    while bits:
        low = bits & -bits
        bits ^= low
        a, b = edges[low.bit_length() - 1]
        n_edges += 1
        for v in (a, b):
            if v not in parent:
                parent[v] = v
                n_comp += 1
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            n_comp -= 1
    return n_edges - len(parent) + n_comp
