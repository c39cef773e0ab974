"""Shared builders and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: evenness
is checked by direct valency counting, connectivity by union-find over
explicit edge lists, span membership by Gaussian elimination.
"""

from __future__ import annotations

import random
from typing import List, Sequence, Tuple

import pytest

from spincomb import Multigraph, build_graph

Edge = Tuple[int, int]


# ---------------------------------------------------------------- named graphs

def loop_graph() -> Multigraph:
    return build_graph(1, [(0, 0)])


def split_graph(edge_count: int) -> Multigraph:
    return build_graph(2, [(0, 1)] * edge_count)


def tetrahedron() -> Multigraph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def fat_triangle() -> Multigraph:
    return build_graph(3, [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)])


def triangle() -> Multigraph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def path_graph(n: int) -> Multigraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def relabeled(g: Multigraph, perm: Sequence[int]) -> Multigraph:
    edges = [
        (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges
    ]
    return build_graph(g.vertex_count, edges)


# ------------------------------------------------------------- random builders

def random_connected_graph(
    rng: random.Random, max_b1: int = 12, max_vertices: int = 10
) -> Multigraph:
    """Random spanning tree plus exactly b1 extra edges (loops allowed)."""
    nu = rng.randint(1, max_vertices)
    edges: List[Edge] = [(rng.randrange(v), v) for v in range(1, nu)]
    lo = 1 if nu == 1 else 0
    for _ in range(rng.randint(lo, max_b1)):
        a = rng.randrange(nu)
        b = rng.randrange(nu)
        edges.append((min(a, b), max(a, b)))
    return build_graph(nu, edges)


def random_graph(rng: random.Random, max_b1: int = 8) -> Multigraph:
    """Disjoint union of 1-3 random connected graphs."""
    parts = [
        random_connected_graph(rng, max_b1=max_b1, max_vertices=5)
        for _ in range(rng.randint(1, 3))
    ]
    edges: List[Edge] = []
    offset = 0
    for p in parts:
        edges.extend((a + offset, b + offset) for a, b in p.edges)
        offset += p.vertex_count
    return build_graph(offset, edges)


def random_tree(rng: random.Random, max_vertices: int = 6) -> Multigraph:
    nu = rng.randint(2, max_vertices)
    return build_graph(nu, [(rng.randrange(v), v) for v in range(1, nu)])


# ------------------------------------------------------------------- oracles

def count_components(vertex_count: int, edges: Sequence[Edge]) -> int:
    """Union-find component count; isolated vertices count as components."""
    parent = list(range(vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = vertex_count
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def bridge_oracle(g: Multigraph) -> List[int]:
    """Edges whose deletion increases the component count."""
    base = count_components(g.vertex_count, g.edges)
    out = []
    for eid in range(g.edge_count):
        rest = [e for i, e in enumerate(g.edges) if i != eid]
        if count_components(g.vertex_count, rest) > base:
            out.append(eid)
    return out


def articulation_oracle(g: Multigraph) -> List[int]:
    """Vertices whose deletion (with incident edges) increases components."""
    base = count_components(g.vertex_count, g.edges)
    out = []
    for v in range(g.vertex_count):
        keep = [i for i in range(g.vertex_count) if i != v]
        remap = {u: i for i, u in enumerate(keep)}
        rest = [(remap[a], remap[b]) for a, b in g.edges if v not in (a, b)]
        if count_components(g.vertex_count - 1, rest) > base:
            out.append(v)
    return out


def even_subset_bits_oracle(g: Multigraph) -> List[int]:
    """All even edge subsets by direct valency counting over all 2^delta."""
    out = []
    for bits in range(1 << g.edge_count):
        val = [0] * g.vertex_count
        for eid in range(g.edge_count):
            if bits >> eid & 1:
                a, b = g.edges[eid]
                val[a] += 1
                val[b] += 1
        if all(x % 2 == 0 for x in val):
            out.append(bits)
    return out


def gf2_rank(rows: List[int]) -> int:
    basis = {}  # top bit -> pivot row
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in basis:
                row ^= basis[top]
            else:
                basis[top] = row
                rank += 1
                break
    return rank


def in_gf2_span(vec: int, rows: List[int]) -> bool:
    return gf2_rank(list(rows)) == gf2_rank(list(rows) + [vec])


def subgraph_betti_oracle(g: Multigraph, bits: int) -> int:
    """delta - nu + c of the subgraph induced by an edge bitmask."""
    chosen = [g.edges[i] for i in range(g.edge_count) if bits >> i & 1]
    verts = sorted({v for e in chosen for v in e})
    remap = {v: i for i, v in enumerate(verts)}
    edges = [(remap[a], remap[b]) for a, b in chosen]
    return len(edges) - len(verts) + count_components(len(verts), edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260823)
