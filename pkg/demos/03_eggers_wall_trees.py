"""From lotus to Eggers-Wall tree and back again.

The lateral boundary of a lotus, rooted at the initial vertex and decorated
with exponents at rupture vertices and indices on membrane segments, is the
Eggers-Wall tree of the curve.  Conversely a complete tree plus a choice of
trunk decomposition rebuilds a lotus.
"""

from lotus.ewtree import (
    canonical_trunk_decomposition,
    complete,
    contact_complexity,
    ew_from_lotus,
    lotus_from_trunks,
    milnor_from_tree,
    semigroup_from_lotus,
    semigroup_from_tree,
    tripod_intersection,
    trunk_decompositions,
    ultrametric,
)
from lotus.fixtures import three_branch_lotus
from lotus.series import ew_from_series

lotus = three_branch_lotus()
tree = ew_from_lotus(lotus)
print("tree extracted from the lotus:")
print(tree.render_text())

# Contact complexity integrates d(exponent)/index along the tree; at interior
# nodes it converts directly into intersection numbers via tripods.
for node in tree.nodes():
    if tree.children(node) and node != tree.root:
        print(f"  c at e={tree.exponents[node]}: {contact_complexity(tree, node)}")
for a, b in [("A1", "A2"), ("A1", "A3"), ("A2", "A3")]:
    print(f"tripod ({a}.{b}) = {tripod_intersection(tree, a, b)}",
          f" ultrametric distance {ultrametric(tree, a, b)}")

# Semigroups of the branches, from the tree and from the lotus.
print("semigroup(A1) via tree:", semigroup_from_tree(tree, "A1").generators)
print("semigroup(A1) via lotus:", semigroup_from_lotus(lotus, "A1"))
print("milnor(A1) via tree:", milnor_from_tree(tree, "A1"))

# Two trunk decompositions exist for this tree; each rebuilds a lotus whose
# tree is the one we started from.
for i, decomposition in enumerate(trunk_decompositions(tree)):
    rebuilt = lotus_from_trunks(tree, decomposition)
    same = "the fixture" if rebuilt.isomorphic(lotus) else "a different lotus"
    print(f"decomposition {i}: {rebuilt} ({same}); round-trip ok:",
          ew_from_lotus(rebuilt).isomorphic(tree))

# The same tree can be produced from explicit series, completed, and rebuilt.
series_tree = ew_from_series({
    "A1": "x^(3/2) + x^(13/6)",
    "A2": "x^(3/2) + x^(7/3) + x^(29/12)",
    "A3": "x^(3/2) + x^2",
})
completed = complete(series_tree)
rebuilt = lotus_from_trunks(completed, canonical_trunk_decomposition(completed))
print("series -> tree -> lotus reproduces the fixture:", rebuilt.isomorphic(lotus))
