"""Exact combinatorics of plane curve singularities.

Build lotuses (triangulated complexes recording blowup processes) from
Newton-Puiseux series, Eggers-Wall trees, or explicit construction steps, and
compute their invariants: dual graphs, log-discrepancies, multiplicities,
intersection numbers, Eggers-Wall trees, semigroups, delta invariants and
Milnor numbers, in characteristic zero and positive characteristic.
"""

from .arith import (
    INF,
    ExtendedRational,
    Infinity,
    Rational,
    cf_eval,
    cf_expand,
    coprime_part,
    p_adic_valuation,
    rat,
    rat_str,
    wedge,
)
from .complexes import Lotus, Petal, StructureError, Vertex, new_lotus
from .ewtree import (
    EWTree,
    canonical_trunk_decomposition,
    complete,
    contact_complexity,
    ew_from_lotus,
    invert_semigroup,
    is_complete,
    is_minimal_generating,
    lotus_from_trunks,
    milnor_from_char_exponents,
    milnor_from_tree,
    semigroup_from_char_exponents,
    semigroup_from_lotus,
    semigroup_from_tree,
    tripod_center,
    tripod_intersection,
    trunk_decompositions,
    ultrametric,
)
from .invariants import (
    delta,
    dual_graph,
    intersection_via_multiplicities,
    intersection_via_order,
    lambda_ord,
    milnor,
    multiplicities,
    orders_of_vanishing,
)
from .newton import lattice_newton_lotus_oracle, newton_lotus
from .series import (
    NPSeries,
    PlanePoly,
    char_exponents,
    coincidence_order,
    conjugates,
    contact_p,
    ew_from_series,
    has_np_root,
    intersection_oracle,
    lotus_tree_from_series,
    parse_np_series,
    tripod_p,
)

__version__ = "0.1.0"
