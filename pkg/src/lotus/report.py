"""Assembling the per-curve invariant report and the cross-method checks."""

from __future__ import annotations

import json

from .arith import rat_str
from .complexes import Lotus
from .ewtree import (
    EWTree,
    canonical_trunk_decomposition,
    complete,
    contact_complexity,
    ew_from_lotus,
    is_complete,
    lotus_from_trunks,
    milnor_from_tree,
    semigroup_from_lotus,
    semigroup_from_tree,
    tripod_center,
    tripod_intersection,
    trunk_decompositions,
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
from .series import (
    NPSeries,
    ew_from_series,
    intersection_oracle,
    lotus_tree_from_series,
)

__all__ = ["Pipeline", "CheckFailure", "build_pipeline", "build_report", "run_checks"]


class CheckFailure(AssertionError):
    """A cross-method consistency check did not hold."""


class Pipeline:
    """Everything derived from one curve spec: lotus, trees, branch names."""

    def __init__(
        self,
        lotus: Lotus,
        char: int = 0,
        series: dict[str, NPSeries] | None = None,
        source_tree: EWTree | None = None,
    ):
        self.lotus = lotus
        self.char = char
        self.series = series or {}
        self.tree = ew_from_lotus(lotus)
        self.source_tree = source_tree
        self.np_tree = (
            ew_from_series(self.series, char) if self.series and char != 0 else None
        )

    def branch_labels(self) -> list[str]:
        return [self.lotus.label(v) for v in self.lotus.branch_leaves()]


def build_pipeline(spec, trunks: str | int = "canonical") -> Pipeline:
    """Build the lotus (and trees) from a loaded CurveSpec."""
    from .files import CurveSpec  # local import to avoid a cycle

    assert isinstance(spec, CurveSpec)
    if spec.kind == "lotus":
        return Pipeline(spec.payload, spec.char)
    if spec.kind == "tree":
        tree = spec.payload
        completed = complete(tree)
        decomposition = _pick_decomposition(completed, trunks)
        return Pipeline(lotus_from_trunks(completed, decomposition), spec.char, source_tree=tree)
    # series bundle
    if spec.char == 0:
        tree = ew_from_series(spec.payload, 0)
    else:
        # In characteristic p the blowup tree may differ from the
        # Newton-Puiseux tree: its ramification points come from the resultant
        # oracle via contact-complexity inversion.
        tree = lotus_tree_from_series(spec.payload, spec.char)
    completed = complete(tree)
    decomposition = _pick_decomposition(completed, trunks)
    lotus = lotus_from_trunks(completed, decomposition)
    return Pipeline(lotus, spec.char, series=spec.payload)


def _pick_decomposition(tree: EWTree, trunks: str | int):
    if trunks == "canonical":
        return canonical_trunk_decomposition(tree)
    if isinstance(trunks, int):
        for i, d in enumerate(trunk_decompositions(tree)):
            if i == trunks:
                return d
        raise ValueError(f"no trunk decomposition with index {trunks}")
    raise ValueError(f"unknown trunk selector {trunks!r}")


def _edge_label(lotus: Lotus, e) -> str:
    return f"{lotus.label(e[0])}-{lotus.label(e[1])}"


def build_report(pipe: Pipeline, branch_subset: list[str] | None = None) -> dict:
    """The full invariant bundle, as a JSON-ready dict with deterministic keys."""
    lotus = pipe.lotus
    branches = branch_subset or sorted(pipe.branch_labels())
    report: dict = {"char": pipe.char, "branches": branches}
    pairs = lambda_ord(lotus)
    report["lambda_ord"] = {
        lotus.label(v): list(pairs[v]) for v in sorted(pairs)
    }
    dg = dual_graph(lotus)
    report["dual_graph"] = {
        "edges": sorted(
            f"{lotus.label(u)}--{lotus.label(v)}" for u, v in dg["edges"]
        ),
        "weights": {lotus.label(v): w for v, w in sorted(dg["weights"].items())},
    }
    report["multiplicities"] = {}
    for label in branches:
        w = multiplicities(lotus, [label])
        report["multiplicities"][label] = {
            _edge_label(lotus, e): m for e, m in w.items()
        }
    if branches:
        total = multiplicities(lotus, branches)
        report["multiplicities"]["(total)"] = {
            _edge_label(lotus, e): m for e, m in total.items()
        }
        orders = orders_of_vanishing(lotus, branches)
        report["orders_of_vanishing"] = {
            lotus.label(v): o for v, o in sorted(orders.items())
        }
    inter = {}
    for i, a in enumerate(branches):
        for b in branches[i + 1 :]:
            inter[f"{a},{b}"] = intersection_via_multiplicities(lotus, a, b)
    report["intersections"] = inter
    report["ew_tree"] = pipe.tree.to_dict()
    contact = {}
    for node in pipe.tree.nodes():
        if pipe.tree.children(node) and node != pipe.tree.root:
            c = contact_complexity(pipe.tree, node)
            contact[rat_str(pipe.tree.exponents[node])] = rat_str(c)
    report["contact_complexity"] = contact
    semigroups = {}
    for label in branches:
        try:
            data = semigroup_from_tree(pipe.tree, label)
            entry = {
                "generators": list(data.generators),
                "minimal": data.generic,
                "characteristic_exponents": [rat_str(a) for a in data.alphas],
            }
            if len(data.alphas) > 0:
                entry["milnor"] = milnor_from_tree(pipe.tree, label)
        except (KeyError, ValueError):
            entry = None
        lot = semigroup_from_lotus(lotus, label)
        semigroups[label] = {
            "from_tree": entry,
            "from_lotus": {
                "generators": list(lot["generators"]),
                "minimal": lot["minimal"],
            },
        }
    report["semigroups"] = semigroups
    if branches:
        report["delta"] = delta(lotus, branches)
        report["milnor"] = milnor(lotus, branches)
        if pipe.char != 0:
            report["milnor_note"] = (
                "char-0 formula 2*delta - r + 1; a lower bound in characteristic p"
            )
    if pipe.np_tree is not None:
        report["np_tree"] = pipe.np_tree.to_dict()
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def report_text(report: dict) -> str:
    lines = [f"char: {report['char']}", f"branches: {', '.join(report['branches'])}"]
    lines.append("lambda/ord pairs:")
    for label, pair in report["lambda_ord"].items():
        lines.append(f"  {label}: ({pair[0]}, {pair[1]})")
    lines.append("dual graph weights:")
    for label, w in report["dual_graph"]["weights"].items():
        lines.append(f"  {label}: {w}")
    if report.get("orders_of_vanishing"):
        lines.append("orders of vanishing:")
        for label, o in report["orders_of_vanishing"].items():
            lines.append(f"  {label}: {o}")
    if report["intersections"]:
        lines.append("intersection numbers:")
        for pair, value in sorted(report["intersections"].items()):
            lines.append(f"  ({pair}): {value}")
    lines.append("contact complexity at interior nodes:")
    for e, c in sorted(report["contact_complexity"].items()):
        lines.append(f"  e={e}: c={c}")
    for label, sg in sorted(report["semigroups"].items()):
        gens = sg["from_lotus"]["generators"]
        flag = "minimal" if sg["from_lotus"]["minimal"] else "NOT minimal"
        lines.append(f"semigroup({label}): {tuple(gens)} [{flag}]")
    if "delta" in report:
        lines.append(f"delta: {report['delta']}")
        note = f"  ({report['milnor_note']})" if "milnor_note" in report else ""
        lines.append(f"milnor: {report['milnor']}{note}")
    return "\n".join(lines) + "\n"


def run_checks(pipe: Pipeline) -> list[str]:
    """Every cross-method assertion; returns the list of checks performed.

    Raises CheckFailure on the first mismatch.
    """
    lotus = pipe.lotus
    performed = []
    branches = pipe.branch_labels()

    def ensure(cond: bool, message: str):
        if not cond:
            raise CheckFailure(message)

    # Pairwise intersection numbers by every available method.
    for i, a in enumerate(branches):
        for b in branches[i + 1 :]:
            via_mult = intersection_via_multiplicities(lotus, a, b)
            via_ord = intersection_via_order(lotus, a, b)
            via_ord_swapped = intersection_via_order(lotus, b, a)
            via_tripod = tripod_intersection(pipe.tree, a, b)
            ensure(
                via_mult == via_ord == via_ord_swapped == via_tripod,
                f"intersection methods disagree on ({a}, {b}): "
                f"{via_mult}/{via_ord}/{via_ord_swapped}/{via_tripod}",
            )
            if a in pipe.series and b in pipe.series:
                oracle = intersection_oracle(pipe.series[a], pipe.series[b], pipe.char)
                ensure(
                    oracle == via_mult,
                    f"series oracle disagrees on ({a}, {b}): {oracle} vs {via_mult}",
                )
            if pipe.np_tree is not None:
                np_tripod = tripod_intersection(pipe.np_tree, a, b)
                ensure(
                    np_tripod == via_mult,
                    f"char-p tree tripod disagrees on ({a}, {b}): {np_tripod}",
                )
                lc = contact_complexity(pipe.tree, tripod_center(pipe.tree, a, b))
                nc = contact_complexity(pipe.np_tree, tripod_center(pipe.np_tree, a, b))
                ensure(lc == nc, f"contact complexities differ at center of ({a}, {b})")
            performed.append(f"intersections({a},{b})")

    # Additivity of multiplicities over disjoint branch subsets.
    if len(branches) > 1:
        total = multiplicities(lotus, branches)
        for e in total:
            parts = sum(multiplicities(lotus, [x])[e] for x in branches)
            ensure(parts == total[e], f"multiplicity additivity fails on edge {e}")
        performed.append("multiplicity-additivity")

    # Delta decomposition into branch deltas plus pairwise intersections.
    if branches:
        total_delta = delta(lotus, branches)
        split = sum(delta(lotus, [x]) for x in branches) + sum(
            intersection_via_multiplicities(lotus, a, b)
            for i, a in enumerate(branches)
            for b in branches[i + 1 :]
        )
        ensure(split == total_delta, "delta decomposition fails")
        performed.append("delta-decomposition")

    # Round-trip through the tree and back.
    tree = pipe.tree
    completed = complete(tree)
    ensure(is_complete(completed), "completion is not complete")
    rebuilt = lotus_from_trunks(completed, canonical_trunk_decomposition(completed))
    ensure(
        ew_from_lotus(rebuilt).isomorphic(completed),
        "tree/lotus round trip failed",
    )
    performed.append("tree-round-trip")

    # Determinism: rebuilding the report gives identical bytes.
    r1 = report_json(build_report(pipe))
    r2 = report_json(build_report(pipe))
    ensure(r1 == r2, "report is not deterministic")
    performed.append("determinism")
    return performed
