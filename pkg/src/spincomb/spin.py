"""Exact numerics of the scheme of stable spin curves over a stable curve.

A curve enters only through its dual graph (vertices = irreducible
components, edges = nodes) plus one geometric-genus mark per vertex.
All multiplicities are carried as exponents of 2; counts and lengths use
Python's unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .cycles import ENUMERATION_CAP, _cyclic_bits, cyclic_betti_set, cyclic_sets, is_cyclic
from .errors import InternalLengthMismatchError, NotEvenError, PreconditionFailedError
from .graphs import (
    EdgeSubset,
    Multigraph,
    _bits_betti,
    betti_number,
    connected_components,
    valency,
)
from .transforms import (
    Verdict,
    classify,
    is_fat_triangle,
    is_loop_graph,
    is_split,
    is_superstable,
    is_tetrahedron,
)


@dataclass(frozen=True)
class CurveDualGraph:
    """Dual graph of a stable curve with per-component genus marks.

    The graph must be connected.  Stability of the curve (every genus-0
    component carries at least 3 nodes) is advisory: check it with
    :meth:`stability_violations`, construction never enforces it.
    """

    graph: Multigraph
    genus_marks: Tuple[int, ...]

    def __post_init__(self):
        if len(self.genus_marks) != self.graph.vertex_count:
            raise ValueError(
                f"{len(self.genus_marks)} genus marks for "
                f"{self.graph.vertex_count} vertices"
            )
        if any(m < 0 for m in self.genus_marks):
            raise ValueError("genus marks must be nonnegative")
        if len(connected_components(self.graph)) != 1:
            raise ValueError("dual graph of a stable curve must be connected")

    def stability_violations(self) -> List[int]:
        """Vertices with genus mark 0 and fewer than 3 nodes."""
        return [
            v
            for v in range(self.graph.vertex_count)
            if self.genus_marks[v] == 0 and valency(self.graph, v) < 3
        ]


@dataclass(frozen=True)
class SpinReport:
    """Exact numerics of the zero-dimensional scheme of spin curves."""

    b: int
    p: int
    genus: int
    even_set_count: int
    component_count: int
    #: exponent n -> number of components of multiplicity 2^n
    multiplicity_multiset: Dict[int, int]
    multiplicity_set_exponents: frozenset
    length: int


@dataclass(frozen=True)
class SupportDescription:
    """The quasistable support associated with one even set of nodes."""

    even_set: EdgeSubset
    blown_up_nodes: EdgeSubset  # complement: nodes replaced by exceptional lines
    exceptional_count: int
    gluing_dimension: int  # b1 of the even set
    point_count: int  # 2^(2p) * 2^(b1 of the even set)
    multiplicity_exponent: int  # b - b1 of the even set


def curve_genus(x: CurveDualGraph) -> int:
    """Arithmetic genus: b1 of the dual graph plus the sum of genus marks."""
    return betti_number(x.graph) + sum(x.genus_marks)


def even_sets(x: CurveDualGraph, cap: int = ENUMERATION_CAP) -> Iterator[EdgeSubset]:
    """Even sets of nodes = cyclic subsets of the dual graph."""
    return cyclic_sets(x.graph, cap)


def is_compact_type(x: CurveDualGraph) -> bool:
    """True iff the dual graph is a tree (b1 = 0)."""
    return betti_number(x.graph) == 0


def spin_report(x: CurveDualGraph, cap: int = ENUMERATION_CAP) -> SpinReport:
    """Component count, multiplicity multiset and length of the spin scheme.

    Each even set D contributes 2^(2p) * 2^(b1(D)) components at
    multiplicity exponent b - b1(D); the total length must come out as
    2^(2g) exactly, which is asserted.
    """
    b = betti_number(x.graph)
    p = sum(x.genus_marks)
    genus = b + p
    multiset: Dict[int, int] = {}
    component_count = 0
    for bits in _cyclic_bits(x.graph, cap):
        n1 = _bits_betti(x.graph, bits)
        count = 1 << (2 * p + n1)
        component_count += count
        exponent = b - n1
        multiset[exponent] = multiset.get(exponent, 0) + count
    length = sum(count << exponent for exponent, count in multiset.items())
    if length != 1 << (2 * genus):
        raise InternalLengthMismatchError(length, 1 << (2 * genus))
    return SpinReport(
        b=b,
        p=p,
        genus=genus,
        even_set_count=1 << b,
        component_count=component_count,
        multiplicity_multiset=dict(sorted(multiset.items())),
        multiplicity_set_exponents=frozenset(multiset),
        length=length,
    )


def multiplicity_set(x: CurveDualGraph, cap: int = ENUMERATION_CAP) -> frozenset:
    """Exponents n with 2^n a multiplicity: {b - m : m cyclic Betti number}."""
    b = betti_number(x.graph)
    return frozenset(b - m for m in cyclic_betti_set(x.graph, cap))


def support_description(x: CurveDualGraph, delta: EdgeSubset) -> SupportDescription:
    """Describe the quasistable support over the even set delta."""
    if not is_cyclic(x.graph, delta):
        raise NotEvenError("the node subset is not even; no spin support exists")
    b = betti_number(x.graph)
    p = sum(x.genus_marks)
    n1 = _bits_betti(x.graph, delta.bits)
    complement = delta ^ EdgeSubset.full(delta.width)
    return SupportDescription(
        even_set=delta,
        blown_up_nodes=complement,
        exceptional_count=len(complement),
        gluing_dimension=n1,
        point_count=1 << (2 * p + n1),
        multiplicity_exponent=b - n1,
    )


def check_corollary_split(x: CurveDualGraph, cap: int = ENUMERATION_CAP) -> Verdict:
    """If the spin scheme has a multiplicity-2^g component and none of
    multiplicity 2^(g-2), the curve is split or the genus-3 polygonal curve."""
    g = curve_genus(x)
    exponents = multiplicity_set(x, cap)
    exercised = g in exponents and (g - 2) not in exponents
    cls = classify(x.graph)
    if not exercised:
        return Verdict(True, cls)
    ok = is_split(x.graph) or (g == 3 and is_tetrahedron(x.graph))
    return Verdict(ok, cls, hypothesis_exercised=True)


def check_corollary_final(x: CurveDualGraph, cap: int = ENUMERATION_CAP) -> Verdict:
    """Genus >= 4, superstable dual graph: (i) if 2^(b-2) is not a
    multiplicity then the graph is split (or the loop / tetrahedron cases
    of the underlying classification); (ii) if 2^(b-3) is absent and some
    smaller multiplicity occurs, the dual graph is the fat-triangle."""
    if curve_genus(x) < 4:
        raise PreconditionFailedError("curve genus must be at least 4")
    if not is_superstable(x.graph):
        raise PreconditionFailedError("dual graph must be superstable")
    bset = cyclic_betti_set(x.graph, cap)
    b1 = betti_number(x.graph)
    cls = classify(x.graph)

    exercised_i = 2 not in bset
    ok_i = not exercised_i or (
        is_split(x.graph)
        or (b1 == 1 and is_loop_graph(x.graph))
        or (b1 == 3 and is_tetrahedron(x.graph))
    )
    exercised_ii = 3 not in bset and any(m > 3 for m in bset)
    ok_ii = not exercised_ii or (b1 == 4 and is_fat_triangle(x.graph))
    return Verdict(
        ok_i and ok_ii,
        cls,
        hypothesis_exercised=exercised_i or exercised_ii,
    )
