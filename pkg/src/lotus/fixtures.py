"""The recurring worked examples, as ready-made lotuses and series bundles.

Three characteristic-zero curves (the cusp, a one-branch curve with two
characteristic exponents, and a three-branch curve) plus the positive
characteristic companions.  The test suite pins the known invariant values
to these.
"""

from __future__ import annotations

from .complexes import Lotus, new_lotus

__all__ = [
    "cusp_lotus",
    "branch_lotus",
    "three_branch_lotus",
    "nonminimal_lotus",
    "char2_lotus",
    "char3_cusp_lotus",
    "CUSP_SERIES",
    "BRANCH_SERIES",
    "THREE_BRANCH_SERIES",
    "CHAR2_SERIES",
    "CHAR3_SEMIGROUPS",
]


def cusp_lotus() -> Lotus:
    """Minimal embedded resolution of the plain cusp: three petals, one branch."""
    lotus = new_lotus("L", "L1")
    e0 = lotus.add_petal("L", "L1")
    e1 = lotus.add_petal("L1", e0)
    e2 = lotus.add_petal(e0, e1)
    lotus.add_base_edge(e2, "A", arrowhead=True)
    return lotus


def branch_lotus() -> Lotus:
    """One branch with characteristic exponents 3/2 and 13/6: seven petals."""
    lotus = new_lotus("L", "L1")
    e0 = lotus.add_petal("L", "L1")
    e1 = lotus.add_petal("L1", e0)
    e2 = lotus.add_petal(e0, e1)
    lotus.add_base_edge(e2, "L2")
    e3 = lotus.add_petal(e2, "L2")
    e4 = lotus.add_petal("L2", e3)
    e5 = lotus.add_petal(e3, e4)
    e6 = lotus.add_petal(e3, e5)
    lotus.add_base_edge(e6, "A1", arrowhead=True)
    return lotus


def three_branch_lotus() -> Lotus:
    """Three branches sharing the first characteristic exponent: ten petals."""
    lotus = new_lotus("L", "L1")
    e0 = lotus.add_petal("L", "L1")
    e1 = lotus.add_petal("L1", e0)
    e2 = lotus.add_petal(e0, e1)
    lotus.add_base_edge(e2, "L2")
    e3 = lotus.add_petal(e2, "L2")
    e4 = lotus.add_petal("L2", e3)
    e5 = lotus.add_petal(e3, e4)
    e6 = lotus.add_petal(e3, e5)
    e7 = lotus.add_petal(e4, e5)
    lotus.add_base_edge(e7, "L3")
    e8 = lotus.add_petal(e7, "L3")
    e9 = lotus.add_petal(e7, e8)
    lotus.add_base_edge(e6, "A1", arrowhead=True)
    lotus.add_base_edge(e9, "A2", arrowhead=True)
    lotus.add_base_edge(e3, "A3", arrowhead=True)
    return lotus


def nonminimal_lotus() -> Lotus:
    """A cusp resolved through a non-minimal choice of bases: sequence (2,2,3)."""
    lotus = new_lotus("L", "L1")
    e1 = lotus.add_petal("L", "L1")
    lotus.add_base_edge(e1, "L2")
    e2 = lotus.add_petal(e1, "L2")
    e3 = lotus.add_petal(e1, e2)
    lotus.add_base_edge(e3, "A", arrowhead=True)
    return lotus


def char2_lotus() -> Lotus:
    """Resolution of y^2+x^3 and y^2+x^3+x^4 together in characteristic 2.

    The first branch's own points are blown up twice after the cusp stage, so
    its base edge is active and the second branch attaches two levels higher.
    """
    lotus = new_lotus("L", "L1")
    e0 = lotus.add_petal("L", "L1")
    e1 = lotus.add_petal("L1", e0)
    e2 = lotus.add_petal(e0, e1)
    lotus.add_base_edge(e2, "A1", arrowhead=True)
    e3 = lotus.add_petal(e2, "A1")
    e4 = lotus.add_petal(e3, "A1")
    lotus.add_base_edge(e4, "A2", arrowhead=True)
    return lotus


def char3_cusp_lotus() -> Lotus:
    """The cusp-shaped lotus of y^3 - x^2 y - x^2 in characteristic 3.

    Same complex as the cusp but with the roles of the axes swapped: the
    second petal sits on the edge at the initial vertex.
    """
    lotus = new_lotus("L", "L1")
    e0 = lotus.add_petal("L", "L1")
    e1 = lotus.add_petal("L", e0)
    e2 = lotus.add_petal(e0, e1)
    lotus.add_base_edge(e2, "A", arrowhead=True)
    return lotus


CUSP_SERIES = {"char": 0, "branches": {"A": "x^(3/2)"}}

BRANCH_SERIES = {"char": 0, "branches": {"A1": "x^(3/2) + x^(13/6)"}}

THREE_BRANCH_SERIES = {
    "char": 0,
    "branches": {
        "A1": "x^(3/2) + x^(13/6)",
        "A2": "x^(3/2) + x^(7/3) + x^(29/12)",
        "A3": "x^(3/2) + x^2",
    },
}

CHAR2_SERIES = {"char": 2, "branches": {"A1": "x^(3/2)", "A2": "x^(3/2) + x^2"}}

# Branches without Newton-Puiseux roots, given by their semigroups and the
# intersection number of the pair (characteristic 3).
CHAR3_SEMIGROUPS = {
    "char": 3,
    "branches": {"A1": {"semigroup": [3, 29]}, "A2": {"semigroup": [6, 9, 26]}},
    "pairwise_intersections": {"A1,A2": 27},
}
