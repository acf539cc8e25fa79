"""Positive characteristic: two trees per curve, and branches without roots.

Over a field of characteristic p the blowup (lotus) tree and the
Newton-Puiseux tree of the same curve can disagree in exponents and indices,
yet share their contact complexity; and some branches have no Newton-Puiseux
roots at all, in which case semigroup generators serve as input.
"""

import json

from lotus.ewtree import (
    contact_complexity,
    ew_from_lotus,
    semigroup_from_tree,
    tripod_center,
    tripod_intersection,
)
from lotus.files import load_curve_spec
from lotus.fixtures import CHAR3_SEMIGROUPS, char2_lotus, char3_cusp_lotus
from lotus.series import (
    PlanePoly,
    conjugates,
    ew_from_series,
    has_np_root,
    intersection_oracle,
    parse_np_series,
)

# In characteristic 2 both y^2+x^3 and y^2+x^3+x^4 have double roots; their
# joint resolution keeps blowing up points on the first branch.
lotus = char2_lotus()
blowup_tree = ew_from_lotus(lotus)
np_tree = ew_from_series({"A1": "x^(3/2)", "A2": "x^(3/2) + x^2"}, 2)
print("blowup tree:")
print(blowup_tree.render_text())
print("Newton-Puiseux tree:")
print(np_tree.render_text())
for name, tree in (("blowup", blowup_tree), ("NP", np_tree)):
    center = tripod_center(tree, "A1", "A2")
    print(f"{name} tree: center exponent {tree.exponents[center]},",
          f"contact {contact_complexity(tree, center)},",
          f"tripod {tripod_intersection(tree, 'A1', 'A2')}")
print("resultant oracle:", intersection_oracle("x^(3/2)", "x^(3/2)+x^2", 2))

# Conjugate counts shrink to the coprime part of the denominator.
print("conjugates of x^(3/2) in char 2:",
      [c.to_text() for c in conjugates(parse_np_series("x^(3/2)", 2))])

# A famous family with no Newton-Puiseux roots: y^p - x^(p-1) y - x^(p-1).
for p in (2, 3, 5):
    f_p = PlanePoly.of(p, {(0, p): 1, (p - 1, 1): -1, (p - 1, 0): -1})
    print(f"y^{p} - x^{p-1}y - x^{p-1} has a Newton-Puiseux root:", has_np_root(f_p, p))

# Such branches enter through their semigroups; pairwise intersection numbers
# then pin the tree via contact complexity.
spec = load_curve_spec(json.dumps(CHAR3_SEMIGROUPS))
tree = spec.payload
print("characteristic-3 pair from semigroups (3,29) and (6,9,26):")
print(tree.render_text())
print("tripod:", tripod_intersection(tree, "A1", "A2"))
print("semigroups recovered:", semigroup_from_tree(tree, "A1").generators,
      semigroup_from_tree(tree, "A2").generators)

# The swapped-axes cusp of y^3 - x^2 y - x^2 in characteristic 3.
print("char-3 cusp tree:")
print(ew_from_lotus(char3_cusp_lotus()).render_text())
