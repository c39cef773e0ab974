"""Multigraph cycle spaces over GF(2), cyclic Betti numbers, and the exact
numerics of schemes of stable spin curves, with exhaustive desk-scale
verification of the two classification theorems."""

__version__ = "0.1.0"

from .graphs import (
    EdgeSubset,
    Multigraph,
    ZeroChain,
    betti_number,
    build_graph,
    connected_components,
    induced_subgraph,
    separating_edges,
    separating_vertices,
    subset_betti,
    valency,
)
from .cycles import (
    ENUMERATION_CAP,
    CycleBasis,
    boundary,
    circuit_decomposition,
    cycle_basis,
    cyclic_betti_set,
    cyclic_sets,
    is_circuit,
    is_cyclic,
    is_eulerian,
)
from .transforms import (
    Verdict,
    are_isomorphic,
    check_theorem2,
    check_theorem3,
    classify,
    contract_separating_edge,
    eliminate_valency1,
    is_fat_triangle,
    is_loop_graph,
    is_split,
    is_superstable,
    is_tetrahedron,
    smooth_valency2,
    superstable_reduction,
)
from .spin import (
    CurveDualGraph,
    SpinReport,
    SupportDescription,
    check_corollary_final,
    check_corollary_split,
    curve_genus,
    even_sets,
    is_compact_type,
    multiplicity_set,
    spin_report,
    support_description,
)
from .enumeration import (
    CanonicalForm,
    SweepReport,
    canonical_form,
    enumerate_multigraphs,
    sweep_theorem2,
    sweep_theorem3,
)
from .curvefile import CurveFile, format_curve_file, parse_curve, parse_curve_file
from . import errors

__all__ = [
    "EdgeSubset",
    "Multigraph",
    "ZeroChain",
    "betti_number",
    "build_graph",
    "connected_components",
    "induced_subgraph",
    "separating_edges",
    "separating_vertices",
    "subset_betti",
    "valency",
    "ENUMERATION_CAP",
    "CycleBasis",
    "boundary",
    "circuit_decomposition",
    "cycle_basis",
    "cyclic_betti_set",
    "cyclic_sets",
    "is_circuit",
    "is_cyclic",
    "is_eulerian",
    "Verdict",
    "are_isomorphic",
    "check_theorem2",
    "check_theorem3",
    "classify",
    "contract_separating_edge",
    "eliminate_valency1",
    "is_fat_triangle",
    "is_loop_graph",
    "is_split",
    "is_superstable",
    "is_tetrahedron",
    "smooth_valency2",
    "superstable_reduction",
    "CurveDualGraph",
    "SpinReport",
    "SupportDescription",
    "check_corollary_final",
    "check_corollary_split",
    "curve_genus",
    "even_sets",
    "is_compact_type",
    "multiplicity_set",
    "spin_report",
    "support_description",
    "CanonicalForm",
    "SweepReport",
    "canonical_form",
    "enumerate_multigraphs",
    "sweep_theorem2",
    "sweep_theorem3",
    "CurveFile",
    "format_curve_file",
    "parse_curve",
    "parse_curve_file",
    "errors",
]
