"""Numeric invariants computed directly on a lotus.

All algorithms are single passes over the petals in creation order (or its
reverse): log-discrepancy/order pairs, self-intersection weights of the dual
graph, multiplicities of strict transforms at infinitely near points, orders
of vanishing, pairwise intersection numbers, the delta invariant and the
Milnor number.
"""

from __future__ import annotations

from .complexes import KIND_EXCEPTIONAL, Lotus, StructureError

__all__ = [
    "lambda_ord",
    "dual_graph",
    "weighted_edges",
    "multiplicities",
    "orders_of_vanishing",
    "intersection_via_multiplicities",
    "intersection_via_order",
    "delta",
    "milnor",
]


def lambda_ord(lotus: Lotus) -> dict[int, tuple[int, int]]:
    """(log-discrepancy, ord of the initial branch) at every vertex.

    The initial vertex carries (1, 1), every other leaf (1, 0), and each
    exceptional vertex the componentwise sum over its petal's base endpoints,
    computed in creation order.
    """
    pairs: dict[int, tuple[int, int]] = {}
    for v in lotus.vertices:
        if v.kind != KIND_EXCEPTIONAL:
            pairs[v.id] = (1, 1) if v.id == lotus.initial_vertex else (1, 0)
    for p in lotus.petals:
        u, v = p.base
        pairs[p.apex] = (pairs[u][0] + pairs[v][0], pairs[u][1] + pairs[v][1])
    return pairs


def dual_graph(lotus: Lotus) -> dict:
    """The weighted dual graph of the total transform, read off the lotus.

    Isomorphic to the lateral boundary; each exceptional vertex weighs the
    opposite of the number of petals incident to it, leaves carry no weight.
    """
    incidence: dict[int, int] = {}
    for p in lotus.petals:
        for v in (*p.base, p.apex):
            incidence[v] = incidence.get(v, 0) + 1
    weights = {
        v.id: -incidence.get(v.id, 0)
        for v in lotus.vertices
        if v.kind == KIND_EXCEPTIONAL
    }
    adjacency = lotus.lateral_boundary()
    edges = sorted(
        (u, w) if u < w else (w, u) for u, nb in adjacency.items() for w in nb
    )
    return {
        "adjacency": adjacency,
        "edges": sorted(set(edges)),
        "weights": weights,
        "arrowheads": [v.id for v in lotus.vertices if v.arrowhead],
    }


def _ekey(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def weighted_edges(lotus: Lotus) -> list[tuple[int, int]]:
    """The edges carrying multiplicity weights: petal bases in creation order,
    then the terminal boundary edge of each branch leaf."""
    out = [p.base for p in lotus.petals]
    seen = {_ekey(*e) for e in out}
    for leaf in lotus.branch_leaves():
        e = lotus.terminal_boundary_edge(leaf)
        if _ekey(*e) not in seen:
            seen.add(_ekey(*e))
            out.append(e)
    return out


def _branch_weights(lotus: Lotus, branches) -> dict[int, int]:
    if isinstance(branches, dict):
        items = {lotus.vertex_id(k): int(v) for k, v in branches.items()}
    else:
        items = {lotus.vertex_id(k): 1 for k in branches}
    if not items:
        raise ValueError("at least one branch is required")
    for v in items:
        if lotus.vertices[v].kind == KIND_EXCEPTIONAL:
            raise StructureError(f"{lotus.label(v)!r} is not a branch or curvetta")
    return items


def _propagate_weights(lotus: Lotus, chosen: dict[int, int]) -> dict[tuple[int, int], int]:
    """Multiplicity weights over petal bases plus every leaf's terminal edge.

    Works for arrowhead branches and curvetta components alike: the strict
    transform of a smooth component meets the boundary at its terminal edge,
    whatever its vertex kind.
    """
    keys = [_ekey(*p.base) for p in lotus.petals]
    terminal = {}
    for v in lotus.vertices:
        if v.kind != KIND_EXCEPTIONAL:
            terminal[v.id] = _ekey(*lotus.terminal_boundary_edge(v.id))
    weights = {k: 0 for k in keys}
    for key in terminal.values():
        weights.setdefault(key, 0)
    incident: dict[int, list[tuple[int, int]]] = {}
    for key in weights:
        for end in key:
            incident.setdefault(end, []).append(key)
    for leaf, mult in chosen.items():
        weights[terminal[leaf]] = mult
    for p in reversed(lotus.petals):
        key = _ekey(*p.base)
        weights[key] = sum(weights[e] for e in incident.get(p.apex, []) if e != key)
    return weights


def multiplicities(lotus: Lotus, branches) -> dict[tuple[int, int], int]:
    """Multiplicities of the chosen branches' strict transforms, as edge weights.

    ``branches`` is an iterable of arrowhead leaf labels/ids, or a mapping of
    those to integer multiplicities for non-reduced sums.  The terminal edge of
    each chosen branch starts at its multiplicity; every petal base then takes
    the sum of the weights of the higher edges at its apex (the proximity
    equalities run downward).
    """
    chosen = _branch_weights(lotus, branches)
    for vid in chosen:
        if not lotus.vertices[vid].arrowhead:
            raise StructureError(
                f"{lotus.label(vid)!r} is not an arrowhead branch leaf"
            )
    weights = _propagate_weights(lotus, chosen)
    return {tuple(e): weights[_ekey(*e)] for e in weighted_edges(lotus)}


def orders_of_vanishing(lotus: Lotus, names) -> dict[int, int]:
    """ord_E(D) at every vertex, D the divisor named by ``names``.

    ``names`` may mix arrowhead branches and smooth curvetta components (the
    initial branch included); each contributes its multiplicity weighting
    seeded at its terminal boundary edge.  Every apex receives the weight of
    its petal's base plus the orders at the base's two endpoints, in creation
    order.  Leaf vertices report 0, except a queried curvetta, which reports
    its own coefficient in the divisor.
    """
    chosen = _branch_weights(lotus, names)
    weights = _propagate_weights(lotus, chosen)
    orders: dict[int, int] = {}
    for v in lotus.vertices:
        if v.kind != KIND_EXCEPTIONAL:
            orders[v.id] = 0
    for p in lotus.petals:
        u, v = p.base
        orders[p.apex] = weights[_ekey(u, v)] + orders[u] + orders[v]
    for v, m in chosen.items():
        if not lotus.vertices[v].arrowhead:
            orders[v] = m
    return orders


def intersection_via_multiplicities(lotus: Lotus, a: int | str, b: int | str) -> int:
    """(A_a . A_b) as the sum over weighted edges of the products of multiplicities."""
    a = lotus.vertex_id(a)
    b = lotus.vertex_id(b)
    if a == b:
        raise ValueError("intersection of a branch with itself is infinite")
    wa = multiplicities(lotus, [a])
    wb = multiplicities(lotus, [b])
    return sum(wa[e] * wb[e] for e in wa)


def intersection_via_order(lotus: Lotus, a: int | str, b: int | str) -> int:
    """(A_a . A_b) as the order of vanishing of A_a along the divisor meeting A_b.

    Evaluates ord at the exceptional vertex whose cross contains the second
    branch; the result is symmetric even though the algorithm is not.
    """
    a = lotus.vertex_id(a)
    b = lotus.vertex_id(b)
    if a == b:
        raise ValueError("intersection of a branch with itself is infinite")
    carrier = lotus.terminal_boundary_edge(b)[0]
    return orders_of_vanishing(lotus, [a])[carrier]


def delta(lotus: Lotus, branches) -> int:
    """Delta invariant: sum of e(e-1)/2 over the multiplicity weighting."""
    w = multiplicities(lotus, branches)
    return sum(m * (m - 1) // 2 for m in w.values())


def milnor(lotus: Lotus, branches) -> int:
    """Milnor number 2*delta - r + 1 (the characteristic-zero formula).

    In positive characteristic this value is only a lower bound for the Milnor
    number of a defining series; callers report it flagged as such.
    """
    chosen = _branch_weights(lotus, branches)
    return 2 * delta(lotus, chosen) - len(chosen) + 1
