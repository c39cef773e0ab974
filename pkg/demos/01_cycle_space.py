"""Walk through the GF(2) cycle space of a small multigraph.

Run from the repository root::

    python3 demos/01_cycle_space.py
"""

from spincomb import (
    betti_number,
    build_graph,
    circuit_decomposition,
    cycle_basis,
    cyclic_betti_set,
    cyclic_sets,
    is_cyclic,
    subset_betti,
)

# K4: four vertices, one edge for every pair
k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
print(f"K4: {k4.vertex_count} vertices, {k4.edge_count} edges, b1 = {betti_number(k4)}")

basis = cycle_basis(k4)
print(f"spanning forest edges: {sorted(basis.spanning_forest.indices())}")
for vec in basis.basis_vectors:
    print(f"  basis vector: edges {sorted(vec.indices())}")

print("\nall cyclic sets (xor-combinations of the basis):")
for s in cyclic_sets(k4):
    tag = "circuit decomposition: " + str(
        [sorted(p.indices()) for p in circuit_decomposition(k4, s)]
    )
    print(f"  {sorted(s.indices())!s:<15} b1 = {subset_betti(k4, s)}  {tag}")

print(f"\ncyclic Betti number set B = {sorted(cyclic_betti_set(k4))}")

from spincomb import EdgeSubset

full = EdgeSubset.full(k4.edge_count)
print(f"full edge set cyclic (all valencies even)? {is_cyclic(k4, full)}")
