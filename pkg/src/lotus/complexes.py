"""The lotus simplicial complex.

A lotus is a finite, contractible, two-dimensional simplicial complex built by
gluing triangles ("petals") onto a growing set of segments.  It records a
sequence of point blowups together with the coordinate crosses chosen at each
blown-up point: every petal is one blowup, its apex the exceptional curve the
blowup creates.

Construction is builder-style: a ``Lotus`` is grown by ``add_petal`` and
``add_base_edge`` during a single-owner phase and treated as immutable
afterwards.  All query methods are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = ["Vertex", "Petal", "Lotus", "new_lotus", "StructureError"]

KIND_INITIAL = "initial"
KIND_CURVETTA = "curvetta"
KIND_BRANCH = "branch"
KIND_EXCEPTIONAL = "exceptional"

BASE = "base"
LATERAL = "lateral"
INTERNAL = "internal"


class StructureError(ValueError):
    """Raised when a construction step violates the lotus invariants."""


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str
    label: str
    arrowhead: bool = False


@dataclass(frozen=True)
class Petal:
    base: tuple[int, int]  # endpoints in the order the edge was oriented at creation
    apex: int
    index: int  # creation index; the apex is the exceptional vertex E_index


def _ekey(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Lotus:
    """A lotus under construction or fully built.

    Vertices are referred to by integer id or by their (unique) label.
    """

    def __init__(self):
        self.vertices: list[Vertex] = []
        self.petals: list[Petal] = []
        self.base_edges: list[tuple[int, int]] = []  # oriented (start, end)
        self._by_label: dict[str, int] = {}

    # -- construction ------------------------------------------------------

    def _new_vertex(self, kind: str, label: str, arrowhead: bool = False) -> int:
        if label in self._by_label:
            raise StructureError(f"duplicate vertex label {label!r}")
        vid = len(self.vertices)
        self.vertices.append(Vertex(vid, kind, label, arrowhead))
        self._by_label[label] = vid
        return vid

    def vertex_id(self, ref: int | str) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < len(self.vertices):
                raise StructureError(f"no vertex with id {ref}")
            return ref
        if ref not in self._by_label:
            raise StructureError(f"no vertex labeled {ref!r}")
        return self._by_label[ref]

    def label(self, vid: int) -> str:
        return self.vertices[vid].label

    def add_petal(self, u: int | str, v: int | str) -> int:
        """Glue a petal onto the edge [u v]; returns the id of the new apex E_k.

        The edge must currently be a base edge or a lateral edge; an edge that
        is already the base of a petal cannot be reused.
        """
        u = self.vertex_id(u)
        v = self.vertex_id(v)
        key = _ekey(u, v)
        if key not in self._edge_set():
            raise StructureError(f"[{self.label(u)} {self.label(v)}] is not an edge of the lotus")
        if key in self._petal_base_keys():
            raise StructureError(
                f"[{self.label(u)} {self.label(v)}] is already the base of a petal"
            )
        k = len(self.petals)
        apex = self._new_vertex(KIND_EXCEPTIONAL, self._fresh_exceptional_label(k))
        self.petals.append(Petal((u, v), apex, k))
        return apex

    def add_base_edge(self, at: int | str, leaf_label: str, arrowhead: bool = False) -> int:
        """Glue a new oriented base edge from an exceptional vertex to a fresh leaf."""
        at = self.vertex_id(at)
        if self.vertices[at].kind != KIND_EXCEPTIONAL:
            raise StructureError(
                f"base edges attach at exceptional vertices, not {self.label(at)!r}"
            )
        kind = KIND_BRANCH if arrowhead else KIND_CURVETTA
        leaf = self._new_vertex(kind, leaf_label, arrowhead)
        self.base_edges.append((at, leaf))
        return leaf

    def _fresh_exceptional_label(self, k: int) -> str:
        label = f"E{k}"
        while label in self._by_label:
            label += "'"
        return label

    # -- edge bookkeeping ---------------------------------------------------

    def _edge_set(self) -> set[tuple[int, int]]:
        edges = {_ekey(*e) for e in self.base_edges}
        for p in self.petals:
            u, v = p.base
            edges.add(_ekey(u, p.apex))
            edges.add(_ekey(v, p.apex))
            edges.add(_ekey(u, v))
        return edges

    def _petal_base_keys(self) -> dict[tuple[int, int], int]:
        return {_ekey(*p.base): p.index for p in self.petals}

    def edges(self) -> list[tuple[int, int]]:
        """All edges, base edges first then petal sides, in creation order."""
        seen = []
        seen_set = set()

        def push(u, v):
            key = _ekey(u, v)
            if key not in seen_set:
                seen_set.add(key)
                seen.append(key)

        events: list[tuple[int, tuple[int, int], int | None]] = []
        # Interleave base edges and petals by creation time: a base edge (s, t)
        # was created when vertex t was, a petal when its apex was.
        for s, t in self.base_edges:
            events.append((t, (s, t), None))
        for p in self.petals:
            events.append((p.apex, p.base, p.apex))
        for _, (u, v), apex in sorted(events):
            push(u, v)
            if apex is not None:
                push(u, apex)
                push(v, apex)
        return seen

    def edge_kind(self, u: int, v: int) -> str:
        key = _ekey(u, v)
        if key in {_ekey(*e) for e in self.base_edges}:
            return BASE
        if key not in self._edge_set():
            raise StructureError("not an edge")
        return INTERNAL if key in self._petal_base_keys() else LATERAL

    def classify_edges(self) -> dict[str, list[tuple[int, int]]]:
        out = {BASE: [], LATERAL: [], INTERNAL: []}
        for u, v in self.edges():
            out[self.edge_kind(u, v)].append((u, v))
        return out

    def inactive_base_edges(self) -> list[tuple[int, int]]:
        """Base edges never used as a petal base (crosses at inactive points)."""
        bases = self._petal_base_keys()
        return [e for e in self.base_edges if _ekey(*e) not in bases]

    def petal_on(self, u: int, v: int) -> Petal | None:
        idx = self._petal_base_keys().get(_ekey(u, v))
        return None if idx is None else self.petals[idx]

    # -- structural queries --------------------------------------------------

    @property
    def initial_vertex(self) -> int:
        return self.base_edges[0][0]

    def lateral_boundary(self) -> dict[int, list[int]]:
        """Adjacency of the lateral boundary: lateral edges + inactive base edges.

        The result is a tree containing every boundary vertex; neighbor lists
        are in deterministic (edge creation) order.
        """
        adj: dict[int, list[int]] = {}

        def link(u, v):
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)

        inactive = {_ekey(*e) for e in self.inactive_base_edges()}
        for u, v in self.edges():
            kind = self.edge_kind(u, v)
            if kind == LATERAL or (kind == BASE and _ekey(u, v) in inactive):
                link(u, v)
        return adj

    def skeleton(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for u, v in self.edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def rupture_vertices(self) -> list[int]:
        """Vertices whose removal disconnects the complex (articulation points)."""
        adj = self.skeleton()
        n = len(self.vertices)
        if n <= 2:
            return []
        disc = [-1] * n
        low = [0] * n
        result = set()
        timer = 0
        root = 0
        # Iterative DFS so large lotuses cannot hit the recursion limit.
        stack = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if pv != root and low[v] >= disc[pv]:
                        result.add(pv)
        if root_children > 1:
            result.add(root)
        return sorted(result)

    def membranes(self) -> list[dict]:
        """One membrane per base edge: the petals transitively rooted at it.

        Returned in base-edge creation order as dicts with keys ``base``
        (the oriented base edge), ``petals`` (creation-ordered petal indices)
        and ``vertices``.
        """
        base_of_petal: dict[int, tuple[int, int]] = {}
        bases = {_ekey(*e): e for e in self.base_edges}
        side_owner: dict[tuple[int, int], int] = {}
        for p in self.petals:
            key = _ekey(*p.base)
            if key in bases:
                base_of_petal[p.index] = bases[key]
            else:
                base_of_petal[p.index] = base_of_petal[side_owner[key]]
            u, v = p.base
            side_owner[_ekey(u, p.apex)] = p.index
            side_owner[_ekey(v, p.apex)] = p.index
        out = []
        for e in self.base_edges:
            petals = [p.index for p in self.petals if base_of_petal.get(p.index) == e]
            verts = {e[0], e[1]}
            for idx in petals:
                verts.update(self.petals[idx].base)
                verts.add(self.petals[idx].apex)
            out.append({"base": e, "petals": petals, "vertices": sorted(verts)})
        return out

    def proximity_graph(self) -> dict[int, list[int]]:
        """Full subgraph of the 1-skeleton on the exceptional vertices.

        Edge (E_j, E_k) iff the corresponding infinitely near points are
        proximate.
        """
        exceptional = {v.id for v in self.vertices if v.kind == KIND_EXCEPTIONAL}
        adj = {v: [] for v in sorted(exceptional)}
        for u, v in self.edges():
            if u in exceptional and v in exceptional:
                adj[u].append(v)
                adj[v].append(u)
        return adj

    def terminal_boundary_edge(self, leaf: int | str) -> tuple[int, int]:
        """The unique lateral-boundary edge at a leaf (curvetta or branch) vertex.

        For a branch never blown up this is its inactive base edge; for one
        whose points were blown up it is the lateral edge at its final
        position.  The first endpoint returned is the non-leaf one.
        """
        leaf = self.vertex_id(leaf)
        if self.vertices[leaf].kind == KIND_EXCEPTIONAL:
            raise StructureError(f"{self.label(leaf)!r} is not a leaf vertex")
        adj = self.lateral_boundary()
        nbrs = adj.get(leaf, [])
        if len(nbrs) != 1:
            raise StructureError(
                f"leaf {self.label(leaf)!r} has {len(nbrs)} boundary edges, expected 1"
            )
        return (nbrs[0], leaf)

    def branch_leaves(self) -> list[int]:
        return [v.id for v in self.vertices if v.arrowhead]

    def curvetta_vertices(self) -> list[int]:
        """The curvetta chain L, L_1, ... in creation order (non-arrowhead leaves)."""
        return [v.id for v in self.vertices if v.kind in (KIND_INITIAL, KIND_CURVETTA)]

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        """Check the structural invariants; raises StructureError on failure."""
        starts = [s for s, _ in self.base_edges]
        if starts and starts[0] != self.initial_vertex:
            raise StructureError("first base edge must start at the initial vertex")
        initial = [e for e in self.base_edges if self.initial_vertex in e]
        if len(initial) != 1:
            raise StructureError("exactly one base edge may contain the initial vertex")
        # Lateral boundary must be a tree on all its vertices.
        adj = self.lateral_boundary()
        edge_count = sum(len(v) for v in adj.values()) // 2
        if adj and edge_count != len(adj) - 1:
            raise StructureError("lateral boundary is not a tree")
        self._check_triangle_condition()

    def _check_triangle_condition(self) -> None:
        # Any three pairwise-adjacent vertices must span exactly one 2-simplex.
        edges = self._edge_set()
        triangles = {frozenset((*p.base, p.apex)) for p in self.petals}
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        for u, v in edges:
            for w in adj[u] & adj[v]:
                if frozenset((u, v, w)) not in triangles:
                    raise StructureError(
                        f"adjacent triple ({self.label(u)}, {self.label(v)}, "
                        f"{self.label(w)}) spans no petal"
                    )

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "kind": v.kind, "label": v.label, "arrowhead": v.arrowhead}
                for v in self.vertices
            ],
            "petals": [{"base": list(p.base), "apex": p.apex} for p in self.petals],
            "base_edges": [{"from": s, "to": t} for s, t in self.base_edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Lotus":
        lotus = cls()
        for v in data["vertices"]:
            vid = lotus._new_vertex(v["kind"], v["label"], bool(v.get("arrowhead")))
            if vid != v["id"]:
                raise StructureError("vertex ids must be 0..n-1 in order")
        for i, p in enumerate(data["petals"]):
            lotus.petals.append(Petal((p["base"][0], p["base"][1]), p["apex"], i))
        for e in data["base_edges"]:
            lotus.base_edges.append((e["from"], e["to"]))
        lotus.validate()
        return lotus

    @classmethod
    def from_json(cls, text: str) -> "Lotus":
        return cls.from_dict(json.loads(text))

    # -- isomorphism ---------------------------------------------------------

    def canonical_form(self):
        """A canonical encoding, equal for two lotuses iff they are isomorphic
        by a leaf-label-preserving simplicial isomorphism fixing base-edge
        orientations."""
        base_at: dict[int, list[tuple[int, int]]] = {}
        for s, t in self.base_edges[1:]:
            base_at.setdefault(s, []).append((s, t))

        def enc_vertex(v: int):
            out = []
            for s, t in sorted(base_at.get(v, []), key=lambda e: self.label(e[1])):
                leaf = self.vertices[t]
                out.append(("B", leaf.label, leaf.arrowhead, enc_edge(s, t)))
            return tuple(out)

        def enc_edge(u: int, v: int):
            p = self.petal_on(u, v)
            if p is None:
                return ("-",)
            w = p.apex
            return ("P", enc_vertex(w), enc_edge(u, w), enc_edge(w, v))

        s, t = self.base_edges[0]
        head = (self.label(s), self.vertices[t].label, self.vertices[t].arrowhead)
        return (head, enc_edge(s, t), enc_vertex(s), enc_vertex(t))

    def isomorphic(self, other: "Lotus") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __repr__(self):
        return (
            f"Lotus({len(self.vertices)} vertices, {len(self.petals)} petals, "
            f"{len(self.base_edges)} base edges)"
        )


def new_lotus(initial_label: str, second_label: str, second_arrowhead: bool = False) -> Lotus:
    """A lotus consisting of the single oriented base edge [initial second].

    The second endpoint is a curvetta by default; pass ``second_arrowhead``
    when the companion of the initial branch is itself a branch of the curve.
    """
    if initial_label == second_label:
        raise StructureError("the two endpoints of the initial cross need distinct labels")
    lotus = Lotus()
    s = lotus._new_vertex(KIND_INITIAL, initial_label)
    kind = KIND_BRANCH if second_arrowhead else KIND_CURVETTA
    t = lotus._new_vertex(kind, second_label, second_arrowhead)
    lotus.base_edges.append((s, t))
    return lotus
