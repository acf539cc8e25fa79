"""Newton lotuses from continued fractions, and the lattice oracle.

The lotus of a single slope is a chain of petals encoded by the continued
fraction expansion; lotuses of several slopes glue along the lotus of their
wedge.  An exact lattice-geometry enumeration double-checks everything.
"""

from fractions import Fraction as F

from lotus.arith import cf_expand, wedge
from lotus.newton import lattice_newton_lotus_oracle, newton_lotus
from lotus.series import (
    char_exponents,
    coincidence_order,
    conjugates,
    intersection_oracle,
    parse_np_series,
)

for gamma in (F(4, 3), F(5, 3)):
    lot, marks = newton_lotus([gamma])
    print(f"slope {gamma}: continued fraction {cf_expand(gamma)},",
          f"{len(lot.petals)} petals, marked vertex {lot.label(marks[gamma])}")

shared = wedge(F(4, 3), F(5, 3))
glued, _ = newton_lotus([F(4, 3), F(5, 3)])
print(f"wedge(4/3, 5/3) = {shared}; glued lotus has {len(glued.petals)} petals")

# The oracle works in the lattice: petals of the universal lotus whose open
# triangles meet the rays.
oracle = lattice_newton_lotus_oracle([F(4, 3), F(5, 3)])
print("lattice petal count:", len(oracle["petals"]), " marks:", oracle["marks"])

# Newton-Puiseux series: exact coefficients, conjugates, intersection numbers.
s = parse_np_series("x^(3/2) + x^(5/2) + x^(11/4)")
print("conjugates of", s.to_text())
for c in conjugates(s):
    print("  ", c.to_text())

other = parse_np_series("-x^(3/2) - x^(5/2) + x^(11/4)")
print("order of coincidence:", coincidence_order(s, other))
print("characteristic exponents:", char_exponents(s))

print("(A1.A2) by resultant valuation:",
      intersection_oracle("x^(3/2)+x^(13/6)", "x^(3/2)+x^(7/3)+x^(29/12)"))
