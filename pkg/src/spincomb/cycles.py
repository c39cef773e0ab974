"""The GF(2) cycle space of a multigraph.

Basis construction, membership, enumeration of all cyclic (= even) edge
sets, the set of cyclic Betti numbers, the eulerian test and circuit
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .errors import CapExceededError, NotCyclicError, WidthMismatchError
from .graphs import (
    EdgeSubset,
    Multigraph,
    ZeroChain,
    _bits_betti,
    connected_components,
    induced_subgraph,
)

#: Enumerating a cycle space of dimension above this is refused.
ENUMERATION_CAP = 30


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental-cycle basis from a deterministic spanning forest."""

    graph_edge_count: int
    basis_vectors: Tuple[EdgeSubset, ...]
    spanning_forest: EdgeSubset

    @property
    def dimension(self) -> int:
        return len(self.basis_vectors)


def boundary(g: Multigraph, s: EdgeSubset) -> ZeroChain:
    """GF(2) sum of endpoint pairs; a loop contributes nothing."""
    if s.width != g.edge_count:
        raise WidthMismatchError(s.width, g.edge_count)
    bits = 0
    for eid in s.indices():
        a, b = g.edges[eid]
        if a != b:
            bits ^= (1 << a) | (1 << b)
    return ZeroChain(bits, g.vertex_count)


def is_cyclic(g: Multigraph, s: EdgeSubset) -> bool:
    """True iff every vertex has even valency in the subgraph induced by s."""
    return boundary(g, s).is_zero


def cycle_basis(g: Multigraph) -> CycleBasis:
    """Fundamental cycles with respect to the lowest-edge-index spanning forest.

    Each non-forest edge e contributes forest-path(endpoints of e) + e;
    a loop contributes just itself.
    """
    n = g.vertex_count
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest_bits = 0
    non_forest: List[int] = []
    forest_adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (a, b) in enumerate(g.edges):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            forest_bits |= 1 << eid
            forest_adj[a].append((eid, b))
            forest_adj[b].append((eid, a))
        else:
            non_forest.append(eid)

    def forest_path_bits(src: int, dst: int) -> int:
        if src == dst:
            return 0
        prev: dict = {src: (-1, -1)}
        stack = [src]
        while stack:
            u = stack.pop()
            if u == dst:
                break
            for eid, w in forest_adj[u]:
                if w not in prev:
                    prev[w] = (u, eid)
                    stack.append(w)
        bits = 0
        u = dst
        while u != src:
            u, eid = prev[u]
            bits |= 1 << eid
        return bits

    width = g.edge_count
    vectors = []
    for eid in non_forest:
        a, b = g.edges[eid]
        vectors.append(EdgeSubset(forest_path_bits(a, b) | (1 << eid), width))
    return CycleBasis(width, tuple(vectors), EdgeSubset(forest_bits, width))


def _cyclic_bits(g: Multigraph, cap: int = ENUMERATION_CAP) -> Iterator[int]:
    """All 2^b1 cyclic edge bitmasks, in coefficient-counter order."""
    basis = [v.bits for v in cycle_basis(g).basis_vectors]
    b1 = len(basis)
    if b1 > cap:
        raise CapExceededError(b1, cap)
    for mask in range(1 << b1):
        bits = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                bits ^= basis[i]
            m >>= 1
            i += 1
        yield bits


def cyclic_sets(g: Multigraph, cap: int = ENUMERATION_CAP) -> Iterator[EdgeSubset]:
    """All cyclic edge subsets (even sets), each exactly once, deterministically."""
    width = g.edge_count
    for bits in _cyclic_bits(g, cap):
        yield EdgeSubset(bits, width)


def cyclic_betti_set(g: Multigraph, cap: int = ENUMERATION_CAP) -> frozenset:
    """The set of first Betti numbers of cyclic subgraphs."""
    return frozenset(_bits_betti(g, bits) for bits in _cyclic_bits(g, cap))


def is_eulerian(g: Multigraph) -> bool:
    """True iff all valencies are even, i.e. the full edge set is cyclic."""
    return is_cyclic(g, EdgeSubset.full(g.edge_count))


def is_circuit(g: Multigraph, s: EdgeSubset) -> bool:
    """Nonempty, connected, and every vertex of valency exactly 2."""
    if s.width != g.edge_count:
        raise WidthMismatchError(s.width, g.edge_count)
    if not s:
        return False
    sub = induced_subgraph(g, s)
    if len(connected_components(sub)) != 1:
        return False
    val = [0] * sub.vertex_count
    for a, b in sub.edges:
        val[a] += 1
        val[b] += 1
    return all(x == 2 for x in val)


def circuit_decomposition(g: Multigraph, s: EdgeSubset) -> List[EdgeSubset]:
    """Edge-disjoint circuits whose union is s.

    Deterministic peeling: walk from the lowest-index remaining edge,
    always taking the lowest-index unused incident edge, until a vertex
    of the walk repeats; the enclosed cycle is peeled off.
    """
    if not is_cyclic(g, s):
        raise NotCyclicError("subset has a vertex of odd valency")
    inc: dict = {}
    for eid in s.indices():
        a, b = g.edges[eid]
        inc.setdefault(a, []).append(eid)
        if a != b:
            inc.setdefault(b, []).append(eid)
    for lst in inc.values():
        lst.sort()

    remaining = set(s.indices())
    width = g.edge_count
    parts: List[EdgeSubset] = []
    while remaining:
        start = min(remaining)
        a, b = g.edges[start]
        if a == b:
            remaining.discard(start)
            parts.append(EdgeSubset(1 << start, width))
            continue
        walk_vertices = [a, b]
        walk_edges = [start]
        position = {a: 0, b: 1}
        current = b
        while True:
            step = None
            for eid in inc[current]:
                if eid in remaining and eid not in walk_edges:
                    step = eid
                    break
            # Even valencies guarantee a continuation before exhaustion.
            x, y = g.edges[step]
            nxt = y if x == current else x
            walk_edges.append(step)
            if nxt in position:
                i = position[nxt]
                circuit = walk_edges[i:]
                remaining.difference_update(circuit)
                parts.append(EdgeSubset.from_indices(width, circuit))
                break
            position[nxt] = len(walk_vertices)
            walk_vertices.append(nxt)
            current = nxt
    return parts
