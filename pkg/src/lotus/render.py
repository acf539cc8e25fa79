"""Diagram emitters: DOT for graphs, TikZ and SVG for lotuses.

The planar layout is computed in exact rational arithmetic (the only rotations
used are quarter turns, which stay rational); TikZ receives coordinates as
fraction expressions, SVG as fixed-point decimals produced by integer
division.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import Lotus
from .ewtree import EWTree
from .invariants import dual_graph

__all__ = ["dot_dual_graph", "dot_proximity_graph", "dot_tree", "tikz_lotus", "svg_lotus"]

Vec = tuple[Fraction, Fraction]


def dot_dual_graph(lotus: Lotus) -> str:
    data = dual_graph(lotus)
    lines = ["graph dual {", "  node [shape=circle];"]
    for v in sorted(data["adjacency"]):
        label = lotus.label(v)
        attrs = [f'label="{label}"']
        if v in data["weights"]:
            attrs.append(f"weight={data['weights'][v]}")
            attrs.append(f'xlabel="{data["weights"][v]}"')
        if lotus.vertices[v].arrowhead:
            attrs.append("shape=rarrow")
        lines.append(f"  v{v} [{', '.join(attrs)}];")
    for u, v in data["edges"]:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_proximity_graph(lotus: Lotus) -> str:
    adj = lotus.proximity_graph()
    lines = ["graph proximity {", "  node [shape=circle];"]
    for v in sorted(adj):
        lines.append(f'  v{v} [label="{lotus.label(v)}"];')
    seen = set()
    for u in sorted(adj):
        for v in adj[u]:
            if (min(u, v), max(u, v)) not in seen:
                seen.add((min(u, v), max(u, v)))
                lines.append(f"  v{min(u, v)} -- v{max(u, v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_tree(tree: EWTree) -> str:
    from .arith import rat_str

    lines = ["digraph ewtree {", "  rankdir=BT;"]
    for v in tree.nodes():
        label = rat_str(tree.exponents[v])
        name = tree.labels.get(v)
        if name:
            label = f"{name}: {label}"
        shape = "rarrow" if v in tree.arrowheads else "circle"
        lines.append(f'  n{v} [label="{label}", shape={shape}];')
    for v in tree.nodes():
        if tree.parent[v] is not None:
            lines.append(f'  n{tree.parent[v]} -> n{v} [label="{tree.edge_index[v]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _rot90(v: Vec) -> Vec:
    return (-v[1], v[0])


def _layout(lotus: Lotus) -> dict[int, Vec]:
    """Exact planar positions: each membrane is drawn in cone coordinates over
    its base edge, attached membranes shrink and turn by quarter steps."""
    pos: dict[int, Vec] = {}
    membranes = {tuple(m["base"]): m for m in lotus.membranes()}
    attached_count: dict[int, int] = {}

    def place_membrane(base: tuple[int, int], origin: Vec, d1: Vec, d2: Vec):
        s, t = base
        lattice: dict[int, tuple[int, int]] = {s: (1, 0), t: (0, 1)}
        for pi in membranes[tuple(base)]["petals"]:
            p = lotus.petals[pi]
            a = lattice[p.base[0]]
            b = lattice[p.base[1]]
            lattice[p.apex] = (a[0] + b[0], a[1] + b[1])
        for v, (a, b) in lattice.items():
            if v not in pos:
                pos[v] = (
                    origin[0] + a * d1[0] + b * d2[0],
                    origin[1] + a * d1[1] + b * d2[1],
                )

    s0, t0 = lotus.base_edges[0]
    place_membrane((s0, t0), (Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)), (Fraction(0), Fraction(2)))
    for base in lotus.base_edges[1:]:
        s, t = base
        origin = pos[s]
        k = attached_count.get(s, 0)
        attached_count[s] = k + 1
        d1 = (Fraction(origin[0], 3), Fraction(origin[1], 3))
        if d1 == (0, 0):
            d1 = (Fraction(1), Fraction(0))
        for _ in range(k + 1):
            d1 = _rot90(d1)
        d2 = _rot90(d1)
        shifted = (origin[0] - d1[0], origin[1] - d1[1])
        place_membrane(base, shifted, d1, d2)
    return pos


def _frac_coord(v: Vec) -> str:
    def one(x: Fraction) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return f"({one(v[0])},{one(v[1])})"


def tikz_lotus(lotus: Lotus) -> str:
    pos = _layout(lotus)
    lines = ["\\begin{tikzpicture}[scale=1]"]
    for p in lotus.petals:
        a, b, c = pos[p.base[0]], pos[p.base[1]], pos[p.apex]
        lines.append(
            f"  \\draw [fill=pink!40] {_frac_coord(a)} -- {_frac_coord(b)} -- {_frac_coord(c)} -- cycle;"
        )
    for s, t in lotus.base_edges:
        arrow = "->" if lotus.vertices[t].arrowhead else "-"
        lines.append(
            f"  \\draw [{arrow}, line width=1.5pt] {_frac_coord(pos[s])} -- {_frac_coord(pos[t])};"
        )
    for u, v in lotus.edges():
        if lotus.edge_kind(u, v) != "base":
            lines.append(f"  \\draw {_frac_coord(pos[u])} -- {_frac_coord(pos[v])};")
    for v in lotus.vertices:
        lines.append(
            f"  \\node [circle, fill, inner sep=1pt, label=above:{{{v.label}}}] at {_frac_coord(pos[v.id])} {{}};"
        )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _decimal(x: Fraction, places: int = 4) -> str:
    scale = 10**places
    scaled = x * scale
    q = scaled.numerator // scaled.denominator  # floor, exact integer math
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{places}d}"


def svg_lotus(lotus: Lotus, size: int = 480) -> str:
    pos = _layout(lotus)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    lo_x, hi_x = min(xs) - 1, max(xs) + 1
    lo_y, hi_y = min(ys) - 1, max(ys) + 1
    span = max(hi_x - lo_x, hi_y - lo_y)
    scale = Fraction(size, span)

    def pt(v: Vec) -> str:
        x = (v[0] - lo_x) * scale
        y = (hi_y - v[1]) * scale
        return f"{_decimal(x, 2)},{_decimal(y, 2)}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for p in lotus.petals:
        tri = " ".join(pt(pos[v]) for v in (*p.base, p.apex))
        parts.append(f'<polygon points="{tri}" fill="#ffd0dc" stroke="none"/>')
    for u, v in lotus.edges():
        width = "2.5" if lotus.edge_kind(u, v) == "base" else "1"
        parts.append(
            f'<line x1="{pt(pos[u]).split(",")[0]}" y1="{pt(pos[u]).split(",")[1]}" '
            f'x2="{pt(pos[v]).split(",")[0]}" y2="{pt(pos[v]).split(",")[1]}" '
            f'stroke="black" stroke-width="{width}"/>'
        )
    for v in lotus.vertices:
        x, y = pt(pos[v.id]).split(",")
        parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        parts.append(f'<text x="{x}" y="{y}" dx="5" dy="-5" font-size="12">{v.label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
