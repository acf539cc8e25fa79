"""Eggers-Wall trees and everything computed on them.

An Eggers-Wall tree is a rooted finite tree whose nodes carry exponents
(rationals, or infinity at the leaves), whose edges carry integer indices that
never decrease away from the root, and whose leaves are labeled by branches.
Trees arise here in three ways: extracted from a lotus, glued from branch
chains (Newton-Puiseux series or semigroup data), or loaded from JSON.

The module also hosts the inverse construction (trunk decompositions and the
lotus they rebuild), contact complexity, the tripod intersection formula,
semigroups of branches, and the Milnor number formulas.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from .arith import INF, ExtendedRational, Infinity, rat, rat_str
from .complexes import KIND_EXCEPTIONAL, Lotus, StructureError, new_lotus
from .invariants import lambda_ord, orders_of_vanishing
from .newton import grow_newton_petals

__all__ = [
    "EWTree",
    "ew_from_lotus",
    "glue_branch_chains",
    "exponent_at_contact",
    "is_complete",
    "complete",
    "trunk_decompositions",
    "canonical_trunk_decomposition",
    "lotus_from_trunks",
    "contact_complexity",
    "tripod_center",
    "tripod_intersection",
    "ultrametric",
    "SemigroupData",
    "semigroup_from_char_exponents",
    "semigroup_from_tree",
    "semigroup_from_lotus",
    "invert_semigroup",
    "milnor_from_char_exponents",
    "milnor_from_tree",
    "is_minimal_generating",
]


def _exp_key(e: ExtendedRational):
    return (1,) if isinstance(e, Infinity) else (0, e)


class EWTree:
    """Rooted exponent/index tree with labeled leaves.

    Node 0 is the root (exponent 0).  ``edge_index[v]`` is the index of the
    edge joining ``parent[v]`` to ``v``; by the usual convention this is also
    the value of the index function at ``v`` itself (its limit from below).
    ``leaf_value`` optionally overrides the index function *at* a leaf, which
    is needed for Newton-Puiseux trees in positive characteristic where the
    index may jump at the leaf end.
    """

    def __init__(self, root_label: str = "L"):
        self.exponents: list[ExtendedRational] = [Fraction(0)]
        self.parent: list[int | None] = [None]
        self.edge_index: list[int | None] = [None]
        self._children: list[list[int]] = [[]]
        self.labels: dict[int, str] = {0: root_label}
        self.arrowheads: set[int] = set()
        self.leaf_value: dict[int, int] = {}

    # -- construction --------------------------------------------------------

    def add_node(
        self,
        parent: int,
        exponent: ExtendedRational,
        index: int,
        label: str | None = None,
        arrowhead: bool = False,
    ) -> int:
        pe = self.exponents[parent]
        if not isinstance(exponent, Infinity) and not isinstance(pe, Infinity):
            if exponent <= pe:
                raise ValueError("exponents must strictly increase away from the root")
        if self.parent[parent] is not None and index < self.edge_index[parent]:
            raise ValueError("indices may not decrease away from the root")
        v = len(self.exponents)
        self.exponents.append(exponent)
        self.parent.append(parent)
        self.edge_index.append(int(index))
        self._children.append([])
        self._children[parent].append(v)
        if label is not None:
            self.labels[v] = label
        if arrowhead:
            self.arrowheads.add(v)
        return v

    def split_edge(self, child: int, exponent: Fraction) -> int:
        """Insert an unlabeled node at the given exponent on the edge into child."""
        u = self.parent[child]
        if u is None:
            raise ValueError("cannot split above the root")
        lo, hi = self.exponents[u], self.exponents[child]
        if not (lo < exponent and (isinstance(hi, Infinity) or exponent < hi)):
            raise ValueError("split exponent must lie strictly inside the edge")
        mid = len(self.exponents)
        self.exponents.append(exponent)
        self.parent.append(u)
        self.edge_index.append(self.edge_index[child])
        self._children.append([child])
        self._children[u][self._children[u].index(child)] = mid
        self.parent[child] = mid
        return mid

    # -- basic queries --------------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    def nodes(self) -> range:
        return range(len(self.exponents))

    def children(self, v: int) -> list[int]:
        return list(self._children[v])

    def leaves(self) -> list[int]:
        return [v for v in self.nodes() if not self._children[v] and v != 0]

    def leaf_by_label(self, label: str) -> int:
        for v in self.leaves():
            if self.labels.get(v) == label:
                return v
        raise KeyError(f"no leaf labeled {label!r}")

    def path(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out[::-1]

    def depth(self, v: int) -> int:
        return len(self.path(v)) - 1

    def index_at_leaf(self, leaf: int) -> int:
        """The value of the index function at a leaf (with char-p override)."""
        return self.leaf_value.get(leaf, self.edge_index[leaf])

    def characteristic_exponents(self, leaf: int | str) -> list[Fraction]:
        """Exponents at the finite discontinuities of the index along [root, leaf]."""
        if isinstance(leaf, str):
            leaf = self.leaf_by_label(leaf)
        path = self.path(leaf)
        out = []
        current = 1
        for v in path[1:]:
            if self.edge_index[v] != current:
                e = self.exponents[self.parent[v]]
                if not isinstance(e, Infinity):
                    out.append(e)
                current = self.edge_index[v]
        return out

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"id": v, "exponent": rat_str(self.exponents[v])} for v in self.nodes()
            ],
            "edges": [
                {"from": self.parent[v], "to": v, "index": self.edge_index[v]}
                for v in self.nodes()
                if self.parent[v] is not None
            ],
            "leaves": [
                {
                    "id": v,
                    "label": self.labels.get(v, f"#{v}"),
                    "arrowhead": v in self.arrowheads,
                    **(
                        {"index_at_leaf": self.leaf_value[v]}
                        if v in self.leaf_value
                        else {}
                    ),
                }
                for v in self.leaves()
            ],
            "root_label": self.labels.get(0, "L"),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "EWTree":
        tree = cls(data.get("root_label", "L"))
        exps = {n["id"]: rat(n["exponent"]) for n in data["nodes"]}
        kids: dict[int, list[dict]] = {}
        for e in data["edges"]:
            kids.setdefault(e["from"], []).append(e)
        leaf_info = {leaf["id"]: leaf for leaf in data["leaves"]}
        mapping = {[n["id"] for n in data["nodes"] if exps[n["id"]] == 0][0]: 0}

        def walk(old: int) -> None:
            for e in sorted(kids.get(old, []), key=lambda e: e["to"]):
                info = leaf_info.get(e["to"], {})
                new = tree.add_node(
                    mapping[old],
                    exps[e["to"]],
                    e["index"],
                    label=info.get("label"),
                    arrowhead=bool(info.get("arrowhead")),
                )
                if "index_at_leaf" in info:
                    tree.leaf_value[new] = info["index_at_leaf"]
                mapping[e["to"]] = new
                walk(e["to"])

        walk(next(iter(mapping)))
        return tree

    @classmethod
    def from_json(cls, text: str) -> "EWTree":
        return cls.from_dict(json.loads(text))

    # -- isomorphism -------------------------------------------------------------

    def canonical_form(self):
        def enc(v: int):
            if not self._children[v]:
                return (
                    _exp_key(self.exponents[v]),
                    self.labels.get(v),
                    v in self.arrowheads,
                    self.index_at_leaf(v),
                )
            kids = sorted(
                (self.edge_index[w], enc(w)) for w in self._children[v]
            )
            return (_exp_key(self.exponents[v]), tuple(kids))

        return enc(0)

    def isomorphic(self, other: "EWTree") -> bool:
        return self.canonical_form() == other.canonical_form()

    def render_text(self) -> str:
        """Indented text rendering: exponents on nodes, indices on edges."""
        lines = []

        def walk(v: int, depth: int, via: int | None):
            tag = self.labels.get(v)
            name = f" {tag}" if tag else ""
            arrow = " ->" if v in self.arrowheads else ""
            idx = "" if via is None else f"--{via}-- "
            extra = (
                f" [i={self.leaf_value[v]}]" if v in self.leaf_value else ""
            )
            lines.append(
                "  " * depth + f"{idx}e={rat_str(self.exponents[v])}{name}{arrow}{extra}"
            )
            for w in sorted(self._children[v], key=lambda w: (_exp_key(self.exponents[w]), self.labels.get(w, ""))):
                walk(w, depth + 1, self.edge_index[w])

        walk(0, 0, None)
        return "\n".join(lines)

    def __repr__(self):
        return f"EWTree({len(list(self.nodes()))} nodes, {len(self.leaves())} leaves)"


# -- tree from a lotus ---------------------------------------------------------


def ew_from_lotus(lotus: Lotus) -> EWTree:
    """The Eggers-Wall tree of the completion carried by a lotus.

    The tree is the lateral boundary rooted at the initial vertex; interior
    marked points are the rupture vertices, with exponent lambda/ord - 1, and
    the index is constant on each membrane's boundary segment, equal to the
    ord value at the membrane's initial vertex.
    """
    pairs = lambda_ord(lotus)
    badj = lotus.lateral_boundary()
    root_v = lotus.initial_vertex
    rupture = set(lotus.rupture_vertices())

    # Index of each boundary edge = ord_L at the start vertex of the membrane
    # it belongs to.
    edge_index: dict[tuple[int, int], int] = {}

    def ekey(u, v):
        return (u, v) if u < v else (v, u)

    for mem in lotus.membranes():
        start = mem["base"][0]
        idx = pairs[start][1]
        if not mem["petals"]:
            edge_index[ekey(*mem["base"])] = idx
        for pi in mem["petals"]:
            p = lotus.petals[pi]
            for side in (
                (p.base[0], p.apex),
                (p.base[1], p.apex),
            ):
                if lotus.edge_kind(*side) == "lateral":
                    edge_index[ekey(*side)] = idx

    marked = {root_v} | rupture | {v for v, nb in badj.items() if len(nb) == 1 and v != root_v}

    tree = EWTree(lotus.label(root_v))
    node_of = {root_v: 0}

    def vertex_exponent(v: int) -> ExtendedRational:
        if lotus.vertices[v].kind == KIND_EXCEPTIONAL:
            lam, ordl = pairs[v]
            return Fraction(lam, ordl) - 1
        return INF

    def walk(from_marked: int, prev: int, cur: int) -> None:
        # Follow the boundary path from a marked vertex until the next marked one.
        idx = edge_index[ekey(prev, cur)]
        while cur not in marked:
            nxt = [w for w in badj[cur] if w != prev]
            if len(nxt) != 1:
                raise StructureError("unmarked boundary vertex of degree != 2")
            if edge_index[ekey(cur, nxt[0])] != idx:
                raise StructureError("index not constant between marked points")
            prev, cur = cur, nxt[0]
        vtx = lotus.vertices[cur]
        node = tree.add_node(
            node_of[from_marked],
            vertex_exponent(cur),
            idx,
            label=None if vtx.kind == KIND_EXCEPTIONAL else vtx.label,
            arrowhead=vtx.arrowhead,
        )
        node_of[cur] = node
        for w in badj[cur]:
            if w != prev:
                walk(cur, cur, w)

    for w in badj.get(root_v, []):
        walk(root_v, root_v, w)
    return tree


# -- glue a tree from per-branch chains ----------------------------------------


def glue_branch_chains(
    chains: dict[str, dict],
    coincidence: dict[frozenset[str], Fraction],
    root_label: str = "L",
) -> EWTree:
    """Glue branch segments into a tree at their pairwise coincidence exponents.

    Each chain is {"markers": [(exponent, index_on_segment_ending_here), ...],
    "leaf_index": i, "leaf_value": optional override, "arrowhead": bool}: the
    markers are the branch's (finite) marked exponents in increasing order with
    the index of the segment *arriving* at them, and leaf_index is the index of
    the final segment up to the leaf.
    """
    tree = EWTree(root_label)
    placed: list[str] = []
    leaf_of: dict[str, int] = {}

    def branch_index_at(label: str, exponent: Fraction) -> int:
        # Index of the chain of `label` just above `exponent`: the index of the
        # segment following its last marker <= exponent.
        chain = chains[label]
        nxt = [seg for e, seg in chain["markers"] if e > exponent]
        return nxt[0] if nxt else chain["leaf_index"]

    def attach_tail(label: str, node: int, from_exp: Fraction) -> None:
        chain = chains[label]
        cur = node
        for e, seg_idx in chain["markers"]:
            if e > from_exp:
                cur = tree.add_node(cur, e, seg_idx)
        leaf = tree.add_node(
            cur,
            INF,
            chain["leaf_index"],
            label=label,
            arrowhead=bool(chain.get("arrowhead", True)),
        )
        if chain.get("leaf_value") is not None:
            tree.leaf_value[leaf] = chain["leaf_value"]
        leaf_of[label] = leaf

    def node_at(leaf_label: str, exponent: Fraction) -> int:
        # The point at `exponent` on [root, leaf], creating a node if needed.
        path = tree.path(leaf_of[leaf_label])
        for v in path:
            if tree.exponents[v] == exponent:
                return v
        for v in path[1:]:
            lo = tree.exponents[tree.parent[v]]
            hi = tree.exponents[v]
            if lo < exponent and (isinstance(hi, Infinity) or exponent < hi):
                return tree.split_edge(v, exponent)
        raise ValueError(f"exponent {exponent} not on path of {leaf_label!r}")

    for label in chains:
        if not placed:
            attach_tail(label, 0, Fraction(-1))
            placed.append(label)
            continue
        best = max(placed, key=lambda m: coincidence[frozenset((label, m))])
        k = coincidence[frozenset((label, best))]
        at = node_at(best, k)
        # The shared part of the chain must agree with the tree.
        tree_path = tree.path(at)
        tree_exponents = {tree.exponents[v] for v in tree_path}
        for e, _seg in chains[label]["markers"]:
            if e < k and e not in tree_exponents:
                raise ValueError(
                    f"characteristic exponent {e} of {label!r} missing on shared path"
                )
        for v, w in zip(tree_path, tree_path[1:]):
            expected = branch_index_at(label, tree.exponents[v])
            if tree.edge_index[w] != expected:
                raise ValueError(
                    f"inconsistent index data gluing branch {label!r} "
                    f"(tree says {tree.edge_index[w]}, chain says {expected})"
                )
        attach_tail(label, at, k)
        placed.append(label)

    # Validate every pairwise coincidence against the glued tree.
    for i, a in enumerate(placed):
        for b in placed[i + 1 :]:
            center = tripod_center(tree, a, b)
            if tree.exponents[center] != coincidence[frozenset((a, b))]:
                raise ValueError(
                    f"coincidence data for ({a}, {b}) is not ultrametric-consistent"
                )
    return tree


def exponent_at_contact(chain: dict, target: Fraction) -> Fraction:
    """Invert the contact-complexity integral along one branch chain.

    ``chain`` is a marker/index chain as consumed by glue_branch_chains; the
    result is the exponent of the point whose contact complexity equals
    ``target``.
    """
    c = Fraction(0)
    prev = Fraction(0)
    for e, idx in chain["markers"]:
        step = Fraction(e - prev, idx)
        if target <= c + step:
            return prev + idx * (target - c)
        c += step
        prev = e
    return prev + chain["leaf_index"] * (target - c)


# -- completion ------------------------------------------------------------------


def is_complete(tree: EWTree) -> bool:
    """True when the upper end of every index level set is a leaf."""
    for v in tree.nodes():
        if not tree.children(v):
            continue
        incoming = 1 if v == tree.root else tree.edge_index[v]
        if all(tree.edge_index[w] != incoming for w in tree.children(v)):
            return False
    return True


def complete(tree: EWTree) -> EWTree:
    """Attach an auxiliary smooth-branch leaf at every non-leaf level-set end.

    New leaves are named L1, L2, ... (skipping names already present) in
    depth-first discovery order.  Idempotent.
    """
    tree = EWTree.from_dict(tree.to_dict())  # work on a copy
    used = set(tree.labels.values())
    counter = 1

    def fresh() -> str:
        nonlocal counter
        while f"L{counter}" in used:
            counter += 1
        used.add(f"L{counter}")
        return f"L{counter}"

    def walk(v: int) -> None:
        kids = tree.children(v)
        if not kids:
            return
        incoming = 1 if v == tree.root else tree.edge_index[v]
        if all(tree.edge_index[w] != incoming for w in kids):
            tree.add_node(v, INF, incoming, label=fresh(), arrowhead=False)
        for w in kids:
            walk(w)

    walk(tree.root)
    return tree


# -- trunk decompositions ----------------------------------------------------------


def _leaf_preference(tree: EWTree, leaf: int):
    # Auxiliary curvetta leaves are preferred over branch leaves, then by label.
    return (leaf in tree.arrowheads, tree.labels.get(leaf, ""))


def _best_reachable_leaf(tree: EWTree, child: int, index: int):
    """Preference key of the best leaf reachable from `child` along index-`index` edges."""
    best = None
    stack = [child]
    while stack:
        v = stack.pop()
        if not tree.children(v):
            key = _leaf_preference(tree, v)
            best = key if best is None or key < best else best
            continue
        for w in tree.children(v):
            if tree.edge_index[w] == index:
                stack.append(w)
    if best is None:
        raise ValueError("tree is not complete: an index level set ends at a non-leaf")
    return best


def trunk_decompositions(tree: EWTree):
    """Iterate over all trunk decompositions of a complete tree.

    A decomposition is returned as a dict mapping each leaf to the node where
    its trunk starts.  The first decomposition yielded is the canonical one.
    """
    if not is_complete(tree):
        raise ValueError("trunk decompositions require a complete tree")

    # Choice points: (node, incoming index, candidate children edges).
    def walk(v: int, trunk_root: int, incoming: int | None, choices, assignment):
        kids = tree.children(v)
        if not kids:
            assignment[v] = trunk_root
            return
        if incoming is None:
            for w in kids:
                walk(w, v, tree.edge_index[w], choices, assignment)
            return
        matching = [w for w in kids if tree.edge_index[w] == incoming]
        matching.sort(key=lambda w: _best_reachable_leaf(tree, w, incoming))
        cont = matching[choices.get(v, 0)]
        for w in kids:
            if w == cont:
                walk(w, trunk_root, incoming, choices, assignment)
            else:
                walk(w, v, tree.edge_index[w], choices, assignment)

    # Enumerate assignments over all junctions with more than one matching child.
    junctions: list[tuple[int, int]] = []

    def find_junctions(v: int, incoming: int | None):
        kids = tree.children(v)
        if kids and incoming is not None:
            matching = [w for w in kids if tree.edge_index[w] == incoming]
            if len(matching) > 1:
                junctions.append((v, len(matching)))
        for w in kids:
            find_junctions(w, tree.edge_index[w])

    find_junctions(tree.root, None)

    def emit(idx: int):
        choices = {}
        rem = idx
        for node, n in junctions:
            choices[node] = rem % n
            rem //= n
        assignment: dict[int, int] = {}
        walk(tree.root, tree.root, None, choices, assignment)
        return assignment

    total = 1
    for _, n in junctions:
        total *= n
    for i in range(total):
        yield emit(i)


def canonical_trunk_decomposition(tree: EWTree) -> dict[int, int]:
    return next(trunk_decompositions(tree))


def lotus_from_trunks(tree: EWTree, decomposition: dict[int, int]) -> Lotus:
    """Rebuild a lotus from a complete tree and one of its trunk decompositions.

    Each trunk contributes the Newton lotus of its renormalized marked
    exponents; membranes are glued by identifying like-labeled marked vertices.
    """
    trunks = []  # (R node, F leaf)
    for leaf, start in decomposition.items():
        trunks.append((start, leaf))
    trunks.sort(
        key=lambda rf: (
            tree.depth(rf[0]),
            _exp_key(tree.exponents[rf[0]]),
            tree.labels.get(rf[1], ""),
        )
    )
    roots = [rf for rf in trunks if rf[0] == tree.root]
    if len(roots) != 1:
        raise ValueError("expected exactly one trunk rooted at the tree root")

    lotus: Lotus | None = None
    vertex_of: dict[int, int] = {}

    for start, leaf in trunks:
        leaf_label = tree.labels.get(leaf, f"#{leaf}")
        arrow = leaf in tree.arrowheads
        if start == tree.root:
            lotus = new_lotus(tree.labels.get(0, "L"), leaf_label, second_arrowhead=arrow)
            u, v = lotus.base_edges[0]
            vertex_of[tree.root] = u
        else:
            u = vertex_of[start]
            v = lotus.add_base_edge(u, leaf_label, arrowhead=arrow)
        vertex_of[leaf] = v
        # Renormalized exponents of the interior marked points of the trunk.
        path = tree.path(leaf)
        cut = path.index(start)
        interior = path[cut + 1 : -1]
        scale = tree.edge_index[leaf]
        e_start = tree.exponents[start]
        slopes = {}
        for node in interior:
            if tree.edge_index[node] != scale:
                raise ValueError("index is not constant along a trunk")
            slopes[scale * (tree.exponents[node] - e_start)] = node
        if tree.edge_index[leaf] != scale:
            raise ValueError("index is not constant along a trunk")
        marks = grow_newton_petals(lotus, u, v, slopes.keys())
        for gamma, node in slopes.items():
            vertex_of[node] = marks[gamma]
    return lotus


# -- contact complexity and tripods ---------------------------------------------


def contact_complexity(tree: EWTree, point) -> ExtendedRational:
    """Integral of d(exponent)/index from the root to the given point.

    ``point`` is a node id, or a pair ``(child_node, exponent)`` addressing the
    point with that exponent on the edge arriving at ``child_node``.
    """
    if isinstance(point, tuple):
        child, exponent = point
        exponent = Fraction(exponent) if not isinstance(exponent, Infinity) else exponent
        node = tree.parent[child]
        lo, hi = tree.exponents[node], tree.exponents[child]
        if isinstance(exponent, Infinity):
            if not isinstance(hi, Infinity):
                raise ValueError("infinite exponent only at a leaf edge")
            return INF
        if not (lo <= exponent and (isinstance(hi, Infinity) or exponent <= hi)):
            raise ValueError("exponent outside the addressed edge")
        extra = Fraction(exponent - lo, tree.edge_index[child])
    else:
        node = point
        extra = Fraction(0)
        if isinstance(tree.exponents[node], Infinity):
            return INF
    total = extra
    path = tree.path(node)
    for u, v in zip(path, path[1:]):
        total += Fraction(tree.exponents[v] - tree.exponents[u], tree.edge_index[v])
    return total


def tripod_center(tree: EWTree, a: int | str, b: int | str) -> int:
    """The infimum of two distinct leaves for the root partial order."""
    if isinstance(a, str):
        a = tree.leaf_by_label(a)
    if isinstance(b, str):
        b = tree.leaf_by_label(b)
    if a == b:
        raise ValueError("tripod center requires two distinct leaves")
    pa = tree.path(a)
    pb = set(tree.path(b))
    center = tree.root
    for v in pa:
        if v in pb:
            center = v
    return center


def tripod_intersection(tree: EWTree, a: int | str, b: int | str) -> int:
    """Intersection number of two branches via the tripod formula."""
    la = tree.leaf_by_label(a) if isinstance(a, str) else a
    lb = tree.leaf_by_label(b) if isinstance(b, str) else b
    center = tripod_center(tree, la, lb)
    value = (
        tree.index_at_leaf(la)
        * tree.index_at_leaf(lb)
        * contact_complexity(tree, center)
    )
    if value.denominator != 1:
        raise ValueError(f"tripod value {value} is not an integer")
    return int(value)


def ultrametric(tree: EWTree, a: int | str, b: int | str) -> Fraction:
    la = tree.leaf_by_label(a) if isinstance(a, str) else a
    lb = tree.leaf_by_label(b) if isinstance(b, str) else b
    inter = tripod_intersection(tree, la, lb)
    return Fraction(tree.index_at_leaf(la) * tree.index_at_leaf(lb), inter)


# -- semigroups and Milnor numbers -----------------------------------------------


class SemigroupData:
    """The Zariski data attached to a sequence of characteristic exponents."""

    def __init__(self, alphas):
        alphas = [Fraction(a) for a in alphas]
        if any(a <= 0 for a in alphas) or sorted(alphas) != alphas or len(set(alphas)) != len(alphas):
            raise ValueError("characteristic exponents must be strictly increasing and positive")
        self.alphas = alphas
        self.generic = not alphas or alphas[0] > 1
        self.beta0 = 1
        for a in alphas:
            self.beta0 = lcm(self.beta0, a.denominator)
        self.betas = [self.beta0] + [int(self.beta0 * a) for a in alphas]
        self.e = [self.beta0]
        for b in self.betas[1:]:
            self.e.append(gcd(self.e[-1], b))
        if self.alphas and self.e[-1] != 1:
            raise ValueError("exponent denominators do not resolve to index 1")
        self.n = [self.e[i - 1] // self.e[i] for i in range(1, len(self.e))]
        self.generators = self._betabars_recursion()
        assert self.generators == self._betabars_closed_form()

    def _betabars_recursion(self) -> tuple[int, ...]:
        g = len(self.alphas)
        bb = [self.beta0]
        if g:
            bb.append(self.betas[1])
        for i in range(2, g + 1):
            bb.append(self.n[i - 2] * bb[i - 1] + self.betas[i] - self.betas[i - 1])
        return tuple(bb)

    def _betabars_closed_form(self) -> tuple[int, ...]:
        g = len(self.alphas)
        bb = [self.beta0]
        for i in range(1, g + 1):
            total = self.betas[i]
            for j in range(1, i):
                prod = self.n[j - 1] - 1
                for t in range(j + 1, i):
                    prod *= self.n[t - 1]
                total += prod * self.betas[j]
            bb.append(total)
        return tuple(bb)

    def milnor(self) -> int:
        """The Milnor number, by both classical formulas (checked to agree)."""
        g = len(self.alphas)
        if g == 0:
            return 0
        via_last = self.n[-1] * self.generators[-1] - self.betas[-1] - self.beta0 + 1
        via_sum = sum((self.n[i] - 1) * self.generators[i + 1] for i in range(g)) - self.beta0 + 1
        assert via_last == via_sum
        return via_last


def semigroup_from_char_exponents(alphas) -> SemigroupData:
    """Zariski's recursion from characteristic exponents to semigroup generators.

    Emits a warning through the returned data's ``generic`` flag when the first
    exponent is not > 1 (tangent reference branch): the generating sequence is
    still returned but minimality claims are not made.
    """
    return SemigroupData(alphas)


def semigroup_from_tree(tree: EWTree, leaf: int | str) -> SemigroupData:
    """Semigroup generators read off an Eggers-Wall tree at a branch leaf.

    Cross-checked internally against the index/exponent closed form.
    """
    if isinstance(leaf, str):
        leaf = tree.leaf_by_label(leaf)
    alphas = tree.characteristic_exponents(leaf)
    data = SemigroupData(alphas)
    if data.beta0 != tree.edge_index[leaf]:
        raise ValueError("leaf index does not match the exponent denominators")
    # Closed form directly in terms of the tree's index and exponent functions;
    # i_L at a discontinuity point is its limit from below.
    path = tree.path(leaf)
    disc = []
    current = 1
    for v in path[1:]:
        if tree.edge_index[v] != current:
            disc.append((tree.exponents[tree.parent[v]], current))
            current = tree.edge_index[v]
    iA = tree.edge_index[leaf]
    for i in range(1, len(disc) + 1):
        e_i, ii = disc[i - 1]
        total = Fraction(e_i)
        for j in range(1, i):
            e_j, ij = disc[j - 1]
            ij_next = disc[j][1]
            total += (Fraction(ii, ij) - Fraction(ii, ij_next)) * e_j
        value = iA * total
        if value.denominator != 1 or int(value) != data.generators[i]:
            raise ValueError("tree closed form disagrees with the Zariski recursion")
    return data


def is_minimal_generating(seq) -> bool:
    """True when no entry lies in the semigroup generated by the others."""
    seq = list(seq)
    for i, g in enumerate(seq):
        others = seq[:i] + seq[i + 1 :]
        reachable = [False] * (g + 1)
        reachable[0] = True
        for h in others:
            if h <= 0:
                continue
            for s in range(h, g + 1):
                if reachable[s - h]:
                    reachable[s] = True
        if reachable[g]:
            return False
    return True


def semigroup_from_lotus(lotus: Lotus, leaf: int | str) -> dict:
    """Generating sequence (ord_{E_0}(A), ..., ord_{E_g}(A)) read off a lotus.

    E_j is the exceptional vertex carrying the j-th curvetta (the partner of
    its unique lateral-boundary edge).  Returns the sequence together with a
    minimality flag; a non-minimal lotus shows up as a redundant generator.
    """
    leaf_label = lotus.label(lotus.vertex_id(leaf))
    orders = orders_of_vanishing(lotus, [leaf_label])
    gens = []
    for cv in lotus.curvetta_vertices():
        carrier = lotus.terminal_boundary_edge(cv)[0]
        gens.append(orders[carrier])
    return {"generators": tuple(gens), "minimal": is_minimal_generating(gens)}


def invert_semigroup(generators) -> list[Fraction]:
    """Recover characteristic exponents from a minimal generating sequence.

    Inverts the Zariski recursion; the result feeds branches given only by
    semigroup data (positive characteristic branches without Newton-Puiseux
    roots).
    """
    gens = [int(g) for g in generators]
    if not gens:
        raise ValueError("empty generating sequence")
    beta0 = gens[0]
    betas = [beta0]
    e = [beta0]
    for i, bb in enumerate(gens[1:], start=1):
        if i == 1:
            beta = bb
        else:
            n_prev = e[i - 2] // e[i - 1]
            beta = bb - n_prev * gens[i - 1] + betas[i - 1]
        betas.append(beta)
        e.append(gcd(e[-1], beta))
    if e[-1] != 1 and len(gens) > 1:
        raise ValueError("generating sequence does not reach index 1")
    alphas = [Fraction(b, beta0) for b in betas[1:]]
    data = SemigroupData(alphas)
    if data.generators != tuple(gens):
        raise ValueError(f"sequence {gens} is not a Zariski generating sequence")
    return alphas


def milnor_from_char_exponents(alphas) -> int:
    return SemigroupData(alphas).milnor()


def milnor_from_tree(tree: EWTree, leaf: int | str) -> int:
    """Milnor number via the index/exponent formula on the tree.

    Checked to agree with the characteristic-exponent formulas.
    """
    if isinstance(leaf, str):
        leaf = tree.leaf_by_label(leaf)
    path = tree.path(leaf)
    disc = []  # (exponent, index at the point = limit from below)
    current = 1
    for v in path[1:]:
        if tree.edge_index[v] != current:
            disc.append((tree.exponents[tree.parent[v]], current))
            current = tree.edge_index[v]
    iA = tree.edge_index[leaf]
    if not disc:
        return 0
    g = len(disc)
    e_g, i_g = disc[-1]
    total = Fraction(e_g, i_g)
    for j in range(1, g):
        e_j, i_j = disc[j - 1]
        i_next = disc[j][1]
        total += (Fraction(1, i_j) - Fraction(1, i_next)) * e_j
    value = iA * iA * total - iA * (e_g + 1) + 1
    assert Fraction(value).denominator == 1
    result = int(value)
    check = milnor_from_char_exponents(tree.characteristic_exponents(leaf))
    assert result == check
    return result
