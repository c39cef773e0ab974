"""Exact numerics of the scheme of stable spin curves for a few families.

Run from the repository root::

    python3 demos/02_spin_numerics.py
"""

from spincomb import (
    CurveDualGraph,
    build_graph,
    even_sets,
    multiplicity_set,
    spin_report,
    support_description,
)


def show(title, x):
    r = spin_report(x)
    print(f"{title}")
    print(f"  genus {r.genus}, b = {r.b}, p = {r.p}")
    print(f"  {r.even_set_count} even sets of nodes, {r.component_count} components")
    for exp in sorted(r.multiplicity_multiset):
        print(f"    {r.multiplicity_multiset[exp]} component(s) of multiplicity 2^{exp}")
    print(f"  length {r.length} = 2^{2 * r.genus}")
    print(f"  L(S_X) = {{{', '.join(f'2^{e}' for e in sorted(multiplicity_set(x)))}}}")
    print()


# split curve of genus 3: two rational components meeting in four nodes
split = CurveDualGraph(build_graph(2, [(0, 1)] * 4), (0, 0))
show("split curve, genus 3", split)

# irreducible one-nodal curve of genus 4
loop = CurveDualGraph(build_graph(1, [(0, 0)]), (3,))
show("irreducible one-nodal curve, genus 4", loop)

# compact type: a chain of three components, no cycles
chain = CurveDualGraph(build_graph(3, [(0, 1), (1, 2)]), (1, 2, 1))
show("compact type chain, genus 4 (reduced scheme)", chain)

# drill into the supports of the split curve, one even set at a time
print("per-even-set supports of the genus-3 split curve:")
for delta in even_sets(split):
    d = support_description(split, delta)
    print(
        f"  nodes {sorted(delta.indices())!s:<13} blown up: {d.exceptional_count}  "
        f"points: {d.point_count}  multiplicity: 2^{d.multiplicity_exponent}"
    )
