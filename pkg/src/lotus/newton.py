"""Newton lotuses: the triangulated polygons attached to sets of slopes.

Two constructions live here.  ``newton_lotus`` (and its in-place variant
``grow_newton_petals``) builds the abstract, purely combinatorial complex by
mediant descent on the slope intervals, which mirrors the continued-fraction
zigzag decomposition.  ``lattice_newton_lotus_oracle`` instead enumerates the
petals of the universal lotus whose open triangles meet the rays, using exact
rational ray/triangle-interior tests; it is the independent geometric check
for everything the combinatorial side produces.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import INF, ExtendedRational, Infinity
from .complexes import Lotus, StructureError, new_lotus

__all__ = ["newton_lotus", "grow_newton_petals", "lattice_newton_lotus_oracle"]

Point = tuple[int, int]


def _normalize_slopes(exponents) -> list[ExtendedRational]:
    slopes = set()
    for e in exponents:
        if isinstance(e, Infinity):
            slopes.add(INF)
            continue
        q = Fraction(e)
        if q < 0:
            raise ValueError(f"slopes must lie in [0, inf], got {q}")
        slopes.add(q)
    if not slopes:
        raise ValueError("empty slope set")
    finite = sorted(q for q in slopes if not isinstance(q, Infinity))
    return finite + ([INF] if INF in slopes else [])


def _slope_below(gamma: Fraction, pt: Point) -> bool:
    """gamma < slope(pt), where slope((x, y)) = y/x and slope((0, y)) = inf."""
    x, y = pt
    if x == 0:
        return True
    return gamma * x < y


def grow_newton_petals(
    lotus: Lotus, u: int, v: int, slopes
) -> dict[Fraction, int]:
    """Grow the Newton lotus of the given finite positive slopes on edge [u v].

    ``u`` plays the role of the slope-0 end of the base edge and ``v`` the
    slope-infinity end.  Returns the marked vertex p(gamma) for each slope.
    Slopes 0 and infinity contribute no petals and are not accepted here.
    """
    marks: dict[Fraction, int] = {}
    for gamma in sorted(set(Fraction(s) for s in slopes)):
        if gamma <= 0:
            raise ValueError("only finite positive slopes create petals")
        cur_u, cur_v = u, v
        pt_u, pt_v = (1, 0), (0, 1)
        while True:
            mediant = (pt_u[0] + pt_v[0], pt_u[1] + pt_v[1])
            petal = lotus.petal_on(cur_u, cur_v)
            apex = petal.apex if petal is not None else lotus.add_petal(cur_u, cur_v)
            if gamma * mediant[0] == mediant[1]:
                marks[gamma] = apex
                break
            if _slope_below(gamma, mediant):
                cur_v, pt_v = apex, mediant
            else:
                cur_u, pt_u = apex, mediant
    return marks


def newton_lotus(
    exponents, labels: tuple[str, str] = ("L", "L1")
) -> tuple[Lotus, dict[ExtendedRational, int]]:
    """The abstract lotus of a set of slopes in [0, inf], with marked vertices.

    The base edge is oriented from the slope-0 end (first label) to the
    slope-infinity end.  Slopes 0 and infinity mark the base endpoints and
    contribute only the base segment.
    """
    slopes = _normalize_slopes(exponents)
    lotus = new_lotus(*labels)
    s, t = lotus.base_edges[0]
    marks: dict[ExtendedRational, int] = {}
    finite_positive = [q for q in slopes if not isinstance(q, Infinity) and q > 0]
    marks.update(grow_newton_petals(lotus, s, t, finite_positive))
    for q in slopes:
        if isinstance(q, Infinity):
            marks[INF] = t
        elif q == 0:
            marks[Fraction(0)] = s
    return lotus, marks


# -- the independent lattice oracle -----------------------------------------


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _ray_meets_interior(gamma: Fraction, tri: tuple[Point, Point, Point]) -> bool:
    """Exact test: does the open ray {t*(1, gamma) : t > 0} meet the open triangle?"""
    lo = Fraction(0)
    hi: Fraction | None = None  # None means unbounded above
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        c = tri[(i + 2) % 3]
        orient = _cross(a, b, c)
        # Strictly inside means sign(cross(a, b, P)) == sign(orient) for each edge.
        # With P = (t, t*gamma) the cross product is linear in t.
        coeff = (b[0] - a[0]) * gamma - (b[1] - a[1])
        const = -(b[0] - a[0]) * a[1] + (b[1] - a[1]) * a[0]
        if orient < 0:
            coeff, const = -coeff, -const
        if coeff == 0:
            if const <= 0:
                return False
        elif coeff > 0:
            lo = max(lo, Fraction(-const) / coeff)
        else:
            bound = Fraction(-const) / coeff
            hi = bound if hi is None else min(hi, bound)
    return hi is None or lo < hi


def lattice_newton_lotus_oracle(exponents) -> dict:
    """Brute-force lattice model of the Newton lotus of a slope set.

    Starting from the petal on (e1, e2), children petals are explored exactly
    when their open triangle meets one of the rays of the given slopes.
    Returns the petal triangles as frozensets of lattice points, together with
    the marked primitive points p(gamma).
    """
    slopes = _normalize_slopes(exponents)
    rays = [q for q in slopes if not isinstance(q, Infinity) and q > 0]
    petals: set[frozenset[Point]] = set()
    root = ((1, 0), (0, 1))
    stack = [root]
    while stack:
        u, v = stack.pop()
        apex = (u[0] + v[0], u[1] + v[1])
        tri = (u, v, apex)
        if any(_ray_meets_interior(q, tri) for q in rays):
            petals.add(frozenset(tri))
            stack.append((u, apex))
            stack.append((apex, v))
    marks: dict[ExtendedRational, Point] = {}
    for q in slopes:
        if isinstance(q, Infinity):
            marks[INF] = (0, 1)
        else:
            marks[q] = (q.denominator, q.numerator)
    return {"petals": frozenset(petals), "marks": marks}


def petal_parent_shape(lotus: Lotus) -> tuple:
    """Canonical parent-tree shape of a single-membrane lotus's petals.

    Used to compare the combinatorial construction against the lattice oracle.
    """
    if len(lotus.base_edges) != 1:
        raise StructureError("petal shape comparison expects a single membrane")

    def enc(u: int, v: int):
        p = lotus.petal_on(u, v)
        if p is None:
            return ("-",)
        return ("P", enc(u, p.apex), enc(p.apex, v))

    return enc(*lotus.base_edges[0])


def lattice_petal_shape(petals: frozenset[frozenset[Point]]) -> tuple:
    """The same canonical shape computed from a lattice petal set."""

    def enc(u: Point, v: Point):
        apex = (u[0] + v[0], u[1] + v[1])
        if frozenset((u, v, apex)) not in petals:
            return ("-",)
        return ("P", enc(u, apex), enc(apex, v))

    return enc((1, 0), (0, 1))
