"""Local operations preserving the cycle space, superstable reduction,
and the recognizers / theorem checkers for the two classification results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Tuple

from .cycles import cyclic_betti_set, cyclic_sets
from .errors import (
    BadIndexError,
    LoopVertexError,
    NotSeparatingError,
    NotSuperstableError,
    VanishingComponentError,
    WrongValencyError,
)
from .graphs import (
    EdgeSubset,
    Multigraph,
    betti_number,
    connected_components,
    separating_edges,
    subset_betti,
    valency,
)


@dataclass(frozen=True)
class Verdict:
    """Result of a classifier or theorem check.

    ``hypothesis_exercised`` distinguishes a genuinely verified conclusion
    from a vacuously true one; ``witness`` is a cyclic set certifying why
    the hypothesis failed, when one is relevant.
    """

    holds: bool
    classification: str  # split | loop | tetrahedron | fat_triangle | other
    witness: Optional[EdgeSubset] = None
    hypothesis_exercised: bool = False


def _drop_vertex(
    vertex_count: int, edges: List[Tuple[int, int]], v: int
) -> Multigraph:
    """Remove vertex v (assumed no longer incident to anything) and relabel."""

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    new_edges = tuple(
        (min(shift(a), shift(b)), max(shift(a), shift(b))) for a, b in edges
    )
    return Multigraph(vertex_count - 1, new_edges)


def eliminate_valency1(g: Multigraph, v: int) -> Multigraph:
    """Operation 1: contract the unique edge at a valency-1 vertex."""
    val = valency(g, v)
    if val != 1:
        raise WrongValencyError(v, val, 1)
    edges = [e for e in g.edges if v not in e]
    return _drop_vertex(g.vertex_count, edges, v)


def smooth_valency2(g: Multigraph, v: int) -> Multigraph:
    """Operation 2: merge the two edges at a valency-2 vertex into one.

    Not allowed on the vertex of a loop.
    """
    val = valency(g, v)
    if val != 2:
        raise WrongValencyError(v, val, 2)
    incident = [eid for eid, e in enumerate(g.edges) if v in e]
    if len(incident) == 1:  # valency 2 from a single loop
        raise LoopVertexError(v)
    far = []
    for eid in incident:
        a, b = g.edges[eid]
        far.append(b if a == v else a)
    merged = (min(far), max(far))
    edges = [e for eid, e in enumerate(g.edges) if eid not in incident]
    edges.append(merged)
    return _drop_vertex(g.vertex_count, edges, v)


def contract_separating_edge(g: Multigraph, e: int) -> Multigraph:
    """Operation 3: contract a separating edge, merging its endpoints."""
    if not 0 <= e < g.edge_count:
        raise BadIndexError(e, g.edge_count)
    if e not in separating_edges(g):
        raise NotSeparatingError(e)
    u, v = g.edges[e]

    def merge(x: int) -> int:
        return u if x == v else x

    edges = [
        (min(merge(a), merge(b)), max(merge(a), merge(b)))
        for eid, (a, b) in enumerate(g.edges)
        if eid != e
    ]
    return _drop_vertex(g.vertex_count, edges, v)


def _loop_at(g: Multigraph, v: int) -> bool:
    return any(a == b == v for a, b in g.edges)


def is_superstable(g: Multigraph) -> bool:
    """All valencies at least 3, except that a vertex carrying exactly one
    loop and nothing else is allowed."""
    for v in range(g.vertex_count):
        val = valency(g, v)
        if val >= 3:
            continue
        if val == 2 and _loop_at(g, v):
            continue
        return False
    return True


def _reduction_candidates(g: Multigraph) -> List[Tuple[str, int]]:
    out: List[Tuple[str, int]] = []
    for v in range(g.vertex_count):
        val = valency(g, v)
        if val == 1:
            out.append(("eliminate", v))
        elif val == 2 and not _loop_at(g, v):
            out.append(("smooth", v))
    return out


def superstable_reduction(
    g: Multigraph, rng: Optional[random.Random] = None
) -> Multigraph:
    """Apply operations 1 and 2 until the graph is superstable.

    Requires b1 >= 1 on every connected component; a tree component would
    reduce to nothing.  With ``rng`` the applicable operation is chosen at
    random, for order-insensitivity testing; the result is unique up to
    isomorphism either way.
    """
    for block in connected_components(g):
        vs = set(block)
        comp_edges = sum(1 for a, b in g.edges if a in vs)
        if comp_edges - len(block) + 1 == 0:
            raise VanishingComponentError(f"component {block} is a tree")
    while True:
        candidates = _reduction_candidates(g)
        if not candidates:
            return g
        op, v = candidates[0] if rng is None else rng.choice(candidates)
        g = eliminate_valency1(g, v) if op == "eliminate" else smooth_valency2(g, v)


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """Brute-force vertex bijection; intended for small graphs only."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(valency(g, v) for v in range(g.vertex_count)) != sorted(
        valency(h, v) for v in range(h.vertex_count)
    ):
        return False
    target = sorted(h.edges)
    for perm in permutations(range(g.vertex_count)):
        mapped = sorted(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges
        )
        if mapped == target:
            return True
    return False


_LOOP = Multigraph(1, ((0, 0),))
_TETRAHEDRON = Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
_FAT_TRIANGLE = Multigraph(3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)))


def is_loop_graph(g: Multigraph) -> bool:
    return are_isomorphic(g, _LOOP)


def is_tetrahedron(g: Multigraph) -> bool:
    return are_isomorphic(g, _TETRAHEDRON)


def is_fat_triangle(g: Multigraph) -> bool:
    return are_isomorphic(g, _FAT_TRIANGLE)


def is_split(g: Multigraph) -> bool:
    """Connected, two vertices, no loops."""
    return (
        g.vertex_count == 2
        and len(connected_components(g)) == 1
        and all(a != b for a, b in g.edges)
    )


def classify(g: Multigraph) -> str:
    if is_split(g):
        return "split"
    if is_loop_graph(g):
        return "loop"
    if is_tetrahedron(g):
        return "tetrahedron"
    if is_fat_triangle(g):
        return "fat_triangle"
    return "other"


def _cyclic_witness(g: Multigraph, target_betti: int) -> Optional[EdgeSubset]:
    for s in cyclic_sets(g):
        if subset_betti(g, s) == target_betti:
            return s
    return None


def check_theorem2(g: Multigraph) -> Verdict:
    """Classification of superstable graphs whose cyclic Betti numbers omit 2.

    Such a graph must be split, a loop (b1 = 1), or the tetrahedron
    (b1 = 3).  When 2 does occur, the verdict is vacuously true and a
    cyclic set of Betti number 2 is attached as witness.
    """
    if not is_superstable(g):
        raise NotSuperstableError("theorem check needs a superstable graph")
    bset = cyclic_betti_set(g)
    cls = classify(g)
    if 2 in bset:
        return Verdict(True, cls, witness=_cyclic_witness(g, 2))
    b1 = betti_number(g)
    ok = (
        is_split(g)
        or (b1 == 1 and is_loop_graph(g))
        or (b1 == 3 and is_tetrahedron(g))
    )
    return Verdict(ok, cls, hypothesis_exercised=True)


def check_theorem3(g: Multigraph) -> Verdict:
    """Superstable graphs omitting 3 but containing some m > 3 in their
    cyclic Betti numbers must be the fat-triangle (with b1 = 4)."""
    if not is_superstable(g):
        raise NotSuperstableError("theorem check needs a superstable graph")
    bset = cyclic_betti_set(g)
    cls = classify(g)
    exercised = 3 not in bset and any(m > 3 for m in bset)
    if not exercised:
        witness = _cyclic_witness(g, 3) if 3 in bset else None
        return Verdict(True, cls, witness=witness)
    ok = betti_number(g) == 4 and is_fat_triangle(g)
    return Verdict(ok, cls, hypothesis_exercised=True)
