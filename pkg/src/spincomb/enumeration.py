"""Exhaustive, isomorphism-reduced generation of small multigraphs and the
machine sweeps verifying the two classification theorems at bounded size.

Canonical forms are computed per connected component: vertices are first
partitioned by iterated degree refinement, then the lexicographically
minimal relabeling is found by brute force over partition-respecting
bijections.  Valid for components with at most 8 vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterator, List, Tuple

from .errors import TooLargeError
from .graphs import Multigraph, connected_components, separating_edges
from .transforms import Verdict, check_theorem2, check_theorem3, is_superstable

Edge = Tuple[int, int]
Key = Tuple[Edge, ...]

#: Brute-force relabeling is capped at this many vertices per component.
MAX_COMPONENT_VERTICES = 8

#: Enumeration is desk-scale; larger bounds are refused.
MAX_ENUM_EDGES = 10
MAX_SWEEP_EDGES = 9


@dataclass(frozen=True)
class CanonicalForm:
    """Edge list after the minimal vertex relabeling; equal iff isomorphic."""

    canonical_key: Key


@dataclass(frozen=True)
class SweepReport:
    graphs_examined: int
    hypothesis_exercised: int
    vacuous: int
    violations: Tuple[Tuple[Key, Verdict], ...]
    elapsed: float


def _refine_classes(n: int, edges: List[Edge]) -> List[List[int]]:
    """Partition vertices by iterated neighborhood refinement.

    Class order is determined by sorted color signatures, hence invariant
    under relabeling.
    """
    nb: List[List[int]] = [[] for _ in range(n)]
    deg = [0] * n
    loops = [0] * n
    for a, b in edges:
        if a == b:
            loops[a] += 1
            deg[a] += 2
        else:
            nb[a].append(b)
            nb[b].append(a)
            deg[a] += 1
            deg[b] += 1
    colors: List = [(deg[v], loops[v]) for v in range(n)]
    n_classes = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nb[v]))) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        k = len(set(colors))
        if k == n_classes:
            break
        n_classes = k
    grouped: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        grouped.setdefault(c, []).append(v)
    return [grouped[c] for c in sorted(grouped)]


def _canonical_connected(n: int, edges: List[Edge]) -> Key:
    """Minimal edge key of a connected graph over class-respecting relabelings."""
    if n > MAX_COMPONENT_VERTICES:
        raise TooLargeError(f"component has {n} vertices, cap is 8")
    classes = _refine_classes(n, edges)
    best: Key = ()
    first = True
    for combo in product(*(permutations(cls) for cls in classes)):
        label = [0] * n
        i = 0
        for block in combo:
            for old in block:
                label[old] = i
                i += 1
        key = tuple(
            sorted(
                (label[a], label[b]) if label[a] <= label[b] else (label[b], label[a])
                for a, b in edges
            )
        )
        if first or key < best:
            best = key
            first = False
    return best


def canonical_form(g: Multigraph) -> CanonicalForm:
    """Canonical key of a multigraph, computed componentwise.

    Components are canonicalized independently, ordered by
    (vertex count, edge count, key), and concatenated with vertex offsets.
    """
    pieces = []
    for block in connected_components(g):
        remap = {v: i for i, v in enumerate(block)}
        vs = set(block)
        sub_edges = [(remap[a], remap[b]) for a, b in g.edges if a in vs]
        key = _canonical_connected(len(block), sub_edges)
        pieces.append((len(block), len(sub_edges), key))
    pieces.sort()
    combined: List[Edge] = []
    offset = 0
    for nverts, _, key in pieces:
        combined.extend((a + offset, b + offset) for a, b in key)
        offset += nverts
    return CanonicalForm(tuple(combined))


def _graph_from_key(key: Key) -> Multigraph:
    nverts = 1 + max((max(a, b) for a, b in key), default=-1)
    return Multigraph(nverts, tuple(key))


# Connected isomorphism classes by edge count, grown by edge augmentation.
_LEVELS: Dict[int, Dict[Key, None]] = {
    1: {((0, 0),): None, ((0, 1),): None}
}


def _connected_level(delta: int) -> Dict[Key, None]:
    top = max(_LEVELS)
    while top < delta:
        nxt: Dict[Key, None] = {}
        for key in _LEVELS[top]:
            g = _graph_from_key(key)
            n = g.vertex_count
            children = []
            for u in range(n):
                for v in range(u, n):
                    children.append(g.edges + ((u, v),))
                if n < MAX_COMPONENT_VERTICES:
                    children.append(g.edges + ((u, n),))
            for child in children:
                ckey = _canonical_connected(
                    1 + max(max(a, b) for a, b in child), list(child)
                )
                nxt.setdefault(ckey, None)
        top += 1
        _LEVELS[top] = nxt
    return _LEVELS[delta]


def _connected_classes(max_edges: int) -> List[Multigraph]:
    out = []
    for delta in range(1, max_edges + 1):
        out.extend(_graph_from_key(k) for k in _connected_level(delta))
    return out


def enumerate_multigraphs(
    max_edges: int,
    *,
    connected: bool = False,
    superstable: bool = False,
    bridgeless: bool = False,
) -> Iterator[Multigraph]:
    """One representative per isomorphism class with at most max_edges edges.

    Components are limited to 8 vertices each (the canonical-form cap), so
    with max_edges above 7 some tree-heavy classes fall outside the range;
    every superstable or bridgeless class is covered.  Deterministic order:
    (vertex count, edge count, canonical key).
    """
    if not 1 <= max_edges <= MAX_ENUM_EDGES:
        raise TooLargeError(f"max_edges must be in 1..{MAX_ENUM_EDGES}")
    comps = _connected_classes(max_edges)
    if superstable:
        comps = [c for c in comps if is_superstable(c)]
    if bridgeless:
        comps = [c for c in comps if not separating_edges(c)]

    results: List[Multigraph] = []
    if connected:
        results = comps
    else:
        comps = sorted(comps, key=lambda c: (c.edge_count, c.edges))

        def unions(start: int, budget: int, acc: List[Multigraph]):
            if acc:
                results.append(_disjoint_union(acc))
            for i in range(start, len(comps)):
                c = comps[i]
                if c.edge_count > budget:
                    break
                unions(i, budget - c.edge_count, acc + [c])

        unions(0, max_edges, [])
    results.sort(
        key=lambda g: (g.vertex_count, g.edge_count, canonical_form(g).canonical_key)
    )
    yield from results


def _disjoint_union(graphs: List[Multigraph]) -> Multigraph:
    edges: List[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((a + offset, b + offset) for a, b in g.edges)
        offset += g.vertex_count
    return Multigraph(offset, tuple(edges))


def _sweep(max_edges: int, checker) -> SweepReport:
    if not 1 <= max_edges <= MAX_SWEEP_EDGES:
        raise TooLargeError(f"max_edges must be in 1..{MAX_SWEEP_EDGES}")
    start = time.perf_counter()
    examined = exercised = vacuous = 0
    violations: List[Tuple[Key, Verdict]] = []
    for g in enumerate_multigraphs(max_edges, superstable=True):
        verdict = checker(g)
        examined += 1
        if verdict.hypothesis_exercised:
            exercised += 1
        else:
            vacuous += 1
        if not verdict.holds:
            violations.append((canonical_form(g).canonical_key, verdict))
    return SweepReport(
        graphs_examined=examined,
        hypothesis_exercised=exercised,
        vacuous=vacuous,
        violations=tuple(violations),
        elapsed=time.perf_counter() - start,
    )


def sweep_theorem2(max_edges: int) -> SweepReport:
    """Check the omit-2 classification on every superstable class."""
    return _sweep(max_edges, check_theorem2)


def sweep_theorem3(max_edges: int) -> SweepReport:
    """Check the omit-3 / exceed-3 classification on every superstable class."""
    return _sweep(max_edges, check_theorem3)
