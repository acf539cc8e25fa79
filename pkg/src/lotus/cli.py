"""Command line front end.

Subcommands: ``build`` (curve spec -> lotus/tree artifacts), ``invariants``
(full report, optionally with the cross-method check suite), ``export``
(DOT/TikZ/SVG diagrams).  Exit codes: 0 ok, 1 usage, 2 parse error,
3 consistency-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complexes import Lotus, StructureError
from .ewtree import EWTree, complete, ew_from_lotus, lotus_from_trunks, trunk_decompositions
from .files import load_curve_spec
from .render import dot_dual_graph, dot_proximity_graph, dot_tree, svg_lotus, tikz_lotus
from .report import CheckFailure, build_pipeline, build_report, report_json, report_text, run_checks
from .series import ParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CHECK = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lotus",
        description="Plane curve singularities: lotuses, Eggers-Wall trees, invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build lotus and tree artifacts from a curve spec")
    p_build.add_argument("spec", help="curve spec file (series, tree, lotus, or steps JSON)")
    p_build.add_argument("--char", type=int, default=None, help="override the characteristic")
    p_build.add_argument("--trunks", default="canonical",
                         help="trunk decomposition: canonical, an index, or 'all'")
    p_build.add_argument("--out", default=".", help="output directory")
    p_build.add_argument("--format", default=None, choices=["dot", "tikz", "svg"],
                         help="also export a diagram of the lotus")

    p_inv = sub.add_parser("invariants", help="compute the invariant report")
    p_inv.add_argument("spec")
    p_inv.add_argument("--char", type=int, default=None)
    p_inv.add_argument("--branches", default=None,
                       help="comma-separated branch subset for the tables")
    p_inv.add_argument("--trunks", default="canonical")
    p_inv.add_argument("--format", default="text", choices=["text", "json"])
    p_inv.add_argument("--check", action="store_true",
                       help="run every cross-method assertion; nonzero exit on mismatch")

    p_exp = sub.add_parser("export", help="export a diagram from a lotus/tree artifact")
    p_exp.add_argument("artifact", help="lotus or tree JSON file")
    p_exp.add_argument("--format", required=True, choices=["dot", "tikz", "svg"])
    p_exp.add_argument("--what", default="lotus",
                       choices=["lotus", "dual", "proximity", "tree"])
    p_exp.add_argument("--out", default=None, help="output file (default: stdout)")
    return parser


def _load(path: str, char_override: int | None):
    text = Path(path).read_text(encoding="utf-8")
    spec = load_curve_spec(text)
    if char_override is not None:
        spec.char = char_override
    return spec


def _trunk_arg(value: str):
    if value in ("canonical", "all"):
        return value
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"--trunks expects 'canonical', 'all' or an index, got {value!r}")


def cmd_build(args) -> int:
    spec = _load(args.spec, args.char)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    trunks = _trunk_arg(args.trunks)
    if trunks == "all" and spec.kind == "tree":
        completed = complete(spec.payload)
        lotuses = [
            lotus_from_trunks(completed, d) for d in trunk_decompositions(completed)
        ]
    else:
        pipe = build_pipeline(spec, "canonical" if trunks == "all" else trunks)
        lotuses = [pipe.lotus]
    for i, lotus in enumerate(lotuses):
        suffix = f"_{i}" if len(lotuses) > 1 else ""
        (out / f"lotus{suffix}.json").write_text(
            json.dumps(lotus.to_dict(), sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        tree = ew_from_lotus(lotus)
        (out / f"tree{suffix}.json").write_text(
            json.dumps(tree.to_dict(), sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        if args.format == "tikz":
            (out / f"lotus{suffix}.tikz").write_text(tikz_lotus(lotus), encoding="utf-8")
        elif args.format == "svg":
            (out / f"lotus{suffix}.svg").write_text(svg_lotus(lotus), encoding="utf-8")
        elif args.format == "dot":
            (out / f"dual{suffix}.dot").write_text(dot_dual_graph(lotus), encoding="utf-8")
    print(f"wrote {len(lotuses)} lotus/tree artifact(s) to {out}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    spec = _load(args.spec, args.char)
    pipe = build_pipeline(spec, _trunk_arg(args.trunks))
    subset = args.branches.split(",") if args.branches else None
    report = build_report(pipe, subset)
    if args.check:
        checks = run_checks(pipe)
        report["checks_passed"] = checks
    sys.stdout.write(
        report_json(report) if args.format == "json" else report_text(report)
    )
    if args.check and args.format == "text":
        sys.stdout.write(f"all {len(report['checks_passed'])} checks passed\n")
    return EXIT_OK


def cmd_export(args) -> int:
    text = Path(args.artifact).read_text(encoding="utf-8")
    data = json.loads(text)
    if args.what == "tree" or "nodes" in data:
        tree = EWTree.from_dict(data)
        if args.format != "dot":
            raise ValueError("trees export to dot only")
        output = dot_tree(tree)
    else:
        lotus = Lotus.from_dict(data)
        if args.what == "dual":
            if args.format != "dot":
                raise ValueError("the dual graph exports to dot")
            output = dot_dual_graph(lotus)
        elif args.what == "proximity":
            if args.format != "dot":
                raise ValueError("the proximity graph exports to dot")
            output = dot_proximity_graph(lotus)
        elif args.format == "tikz":
            output = tikz_lotus(lotus)
        elif args.format == "svg":
            output = svg_lotus(lotus)
        else:
            raise ValueError("a lotus exports to tikz or svg")
    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "build":
            return cmd_build(args)
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "export":
            return cmd_export(args)
        return EXIT_USAGE
    except CheckFailure as exc:
        print(f"consistency check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ParseError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, StructureError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
