"""Loading curve specifications from files.

A curve spec is a JSON document in exactly one of four forms:

* a series bundle: ``{"char": 0|p, "branches": {"A1": "x^(3/2)+...", ...}}``
  where a branch may also be ``{"semigroup": [...]}`` (positive-characteristic
  branches without Newton-Puiseux roots), in which case pairwise intersection
  numbers must be supplied under ``"pairwise_intersections"``;
* an Eggers-Wall tree: ``{"nodes": [...], "edges": [...], "leaves": [...]}``;
* a lotus: ``{"vertices": [...], "petals": [...], "base_edges": [...]}``;
* a construction script: ``{"construction": {"initial": [...], "steps": [...]}}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from .complexes import Lotus, new_lotus
from .ewtree import EWTree, exponent_at_contact, glue_branch_chains, invert_semigroup
from .series import NPSeries, parse_np_series

__all__ = ["CurveSpec", "load_curve_spec", "lotus_from_steps"]


class CurveSpec:
    """One loaded input: exactly one of series bundle, tree, lotus, or steps."""

    def __init__(self, kind: str, payload, char: int = 0, extras: dict | None = None):
        self.kind = kind  # "series" | "tree" | "lotus"
        self.payload = payload
        self.char = char
        self.extras = extras or {}


def lotus_from_steps(data: dict) -> Lotus:
    """Replay an explicit construction script."""
    initial = data["initial"]
    lotus = new_lotus(
        initial[0], initial[1], second_arrowhead=bool(data.get("initial_arrowhead"))
    )
    for step in data.get("steps", []):
        if step["op"] == "petal":
            lotus.add_petal(*step["edge"])
        elif step["op"] == "leaf":
            lotus.add_base_edge(step["at"], step["label"], bool(step.get("arrowhead")))
        else:
            raise ValueError(f"unknown construction step {step['op']!r}")
    lotus.validate()
    return lotus


def _chains_from_semigroups(branch_data: dict[str, dict], intersections: dict) -> EWTree:
    chains = {}
    for label, spec in branch_data.items():
        alphas = invert_semigroup(spec["semigroup"])
        beta0 = 1
        for a in alphas:
            beta0 = lcm(beta0, a.denominator)
        e = [beta0]
        for a in alphas:
            e.append(gcd(e[-1], int(a * beta0)))
        markers = [(a, beta0 // e[i]) for i, a in enumerate(alphas)]
        chains[label] = {
            "markers": markers,
            "leaf_index": beta0 // e[-1],
            "arrowhead": True,
        }
    labels = list(chains)
    coincidence = {}
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            key = f"{a},{b}" if f"{a},{b}" in intersections else f"{b},{a}"
            inter = intersections[key]
            contact = Fraction(
                inter,
                chains[a]["leaf_index"] * chains[b]["leaf_index"],
            )
            ea = exponent_at_contact(chains[a], contact)
            eb = exponent_at_contact(chains[b], contact)
            if ea != eb:
                raise ValueError(
                    f"intersection data for ({a}, {b}) places the center at "
                    f"inconsistent exponents {ea} vs {eb}"
                )
            coincidence[frozenset((a, b))] = ea
    return glue_branch_chains(chains, coincidence)


def load_curve_spec(text: str) -> CurveSpec:
    data = json.loads(text)
    forms = [key for key in ("branches", "nodes", "vertices", "construction") if key in data]
    if len(forms) != 1:
        raise ValueError(
            f"curve spec must contain exactly one of branches/nodes/vertices/"
            f"construction, found {forms}"
        )
    form = forms[0]
    if form == "construction":
        return CurveSpec("lotus", lotus_from_steps(data["construction"]),
                         char=int(data.get("char", 0)))
    if form == "vertices":
        return CurveSpec("lotus", Lotus.from_dict(data), char=int(data.get("char", 0)))
    if form == "nodes":
        return CurveSpec("tree", EWTree.from_dict(data), char=int(data.get("char", 0)))
    char = int(data.get("char", 0))
    series: dict[str, NPSeries] = {}
    semigroup_branches: dict[str, dict] = {}
    for label, value in data["branches"].items():
        if isinstance(value, str):
            series[label] = parse_np_series(value, char)
        elif isinstance(value, dict) and "semigroup" in value:
            semigroup_branches[label] = value
        else:
            raise ValueError(f"branch {label!r}: expected a series string or semigroup data")
    if series and semigroup_branches:
        raise ValueError("mixing series and semigroup branches is not supported")
    if semigroup_branches:
        if len(semigroup_branches) > 1 and "pairwise_intersections" not in data:
            raise ValueError("semigroup branches need pairwise_intersections data")
        tree = _chains_from_semigroups(
            semigroup_branches, data.get("pairwise_intersections", {})
        )
        return CurveSpec("tree", tree, char=char, extras={"from_semigroups": True})
    return CurveSpec("series", series, char=char)
