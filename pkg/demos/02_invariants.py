"""Every numeric invariant, read off one lotus.

The example curve has three branches; its lotus carries ten petals.  All
computations below are single passes over the petals with exact integers.
"""

from lotus.fixtures import three_branch_lotus
from lotus.invariants import (
    delta,
    dual_graph,
    intersection_via_multiplicities,
    intersection_via_order,
    lambda_ord,
    milnor,
    multiplicities,
    orders_of_vanishing,
)

lotus = three_branch_lotus()
branches = ["A1", "A2", "A3"]
lab = lotus.label

# Log-discrepancies and orders of vanishing of the initial axis: each
# exceptional vertex is simply the sum of its petal-base endpoints.
print("lambda/ord pairs:")
for v, pair in lambda_ord(lotus).items():
    print(f"  {lab(v):>3}: {pair}")

# Self-intersections on the dual graph: minus the petal count at each vertex.
print("dual graph weights:", {lab(v): w for v, w in dual_graph(lotus)["weights"].items()})

# Multiplicities of the strict transforms: seed 1 at each chosen branch's
# terminal edge, then each petal base sums the weights above its apex.
weights = multiplicities(lotus, branches)
print("multiplicities of A1+A2+A3:")
for (u, v), w in weights.items():
    print(f"  [{lab(u)} {lab(v)}]: {w}")

# Orders of vanishing accumulate multiplicities up the complex.
orders = orders_of_vanishing(lotus, branches)
print("orders of vanishing:", {lab(v): o for v, o in orders.items() if lab(v).startswith("E")})

# Intersection numbers of pairs of branches, two ways that always agree.
for a, b in [("A1", "A2"), ("A1", "A3"), ("A2", "A3")]:
    via_m = intersection_via_multiplicities(lotus, a, b)
    via_o = intersection_via_order(lotus, a, b)
    print(f"({a}.{b}) = {via_m} (products of multiplicities) = {via_o} (order of vanishing)")

# Delta invariant and Milnor number.
print("delta:", delta(lotus, branches))
print("milnor:", milnor(lotus, branches))
