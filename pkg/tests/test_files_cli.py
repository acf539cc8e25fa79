from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from lotus.cli import main
from lotus.ewtree import ew_from_lotus, semigroup_from_tree, tripod_intersection
from lotus.files import load_curve_spec, lotus_from_steps
from lotus.fixtures import char3_cusp_lotus, nonminimal_lotus, three_branch_lotus
from lotus.report import build_pipeline

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name: str):
    return load_curve_spec((FIXTURES / name).read_text())


def test_fixture_files_load():
    for name in (
        "cusp.series.json",
        "branch.series.json",
        "threebranch.series.json",
        "char2.series.json",
        "char3.semigroups.json",
        "cusp.lotus.json",
        "threebranch.lotus.json",
        "char2.lotus.json",
        "char3cusp.steps.json",
        "nonminimal.steps.json",
    ):
        spec = load(name)
        assert spec.kind in ("series", "tree", "lotus")


def test_steps_fixtures_match_builders():
    spec = load("char3cusp.steps.json")
    assert spec.kind == "lotus" and spec.char == 3
    assert spec.payload.isomorphic(char3_cusp_lotus())
    spec2 = load("nonminimal.steps.json")
    assert spec2.payload.isomorphic(nonminimal_lotus())


def test_series_fixture_builds_threebranch_lotus():
    spec = load("threebranch.series.json")
    pipe = build_pipeline(spec)
    assert pipe.lotus.isomorphic(three_branch_lotus())


def test_char3_semigroup_fixture():
    spec = load("char3.semigroups.json")
    assert spec.kind == "tree"
    tree = spec.payload
    assert tripod_intersection(tree, "A1", "A2") == 27
    assert semigroup_from_tree(tree, "A1").generators == (3, 29)
    assert semigroup_from_tree(tree, "A2").generators == (6, 9, 26)


def test_mixed_branch_forms_rejected():
    bad = {"char": 3, "branches": {"A": "x^2", "B": {"semigroup": [2, 3]}}}
    with pytest.raises(ValueError):
        load_curve_spec(json.dumps(bad))


def test_ambiguous_spec_rejected():
    with pytest.raises(ValueError):
        load_curve_spec(json.dumps({"branches": {}, "nodes": []}))


def test_lotus_from_steps_unknown_op():
    with pytest.raises(ValueError):
        lotus_from_steps({"initial": ["L", "L1"], "steps": [{"op": "zap"}]})


def test_cli_invariants_check_ok(capsys):
    code = main(["invariants", str(FIXTURES / "threebranch.series.json"), "--check"])
    out = capsys.readouterr().out
    assert code == 0
    assert "132" in out
    assert "delta: 339" in out
    assert "milnor: 676" in out
    assert "checks passed" in out


def test_cli_invariants_all_fixture_files(capsys):
    for name in (
        "cusp.series.json",
        "branch.series.json",
        "threebranch.series.json",
        "char2.series.json",
        "char3.semigroups.json",
        "cusp.lotus.json",
        "char2.lotus.json",
        "char3cusp.steps.json",
        "nonminimal.steps.json",
    ):
        code = main(["invariants", str(FIXTURES / name), "--check"])
        assert code == 0, name
        capsys.readouterr()


def test_cli_build_and_export(tmp_path, capsys):
    code = main(
        ["build", str(FIXTURES / "cusp.series.json"), "--out", str(tmp_path), "--format", "tikz"]
    )
    assert code == 0
    assert (tmp_path / "lotus.json").exists()
    assert (tmp_path / "tree.json").exists()
    assert (tmp_path / "lotus.tikz").exists()
    capsys.readouterr()
    code = main(["export", str(tmp_path / "lotus.json"), "--format", "dot", "--what", "dual"])
    out = capsys.readouterr().out
    assert code == 0
    assert "graph dual" in out and "weight=-3" in out


def test_cli_build_all_trunks(tmp_path, capsys):
    # The three-branch tree admits two decompositions; --trunks all writes both.
    pipe = build_pipeline(load("threebranch.series.json"))
    tree_file = tmp_path / "tree_input.json"
    tree_file.write_text(json.dumps(ew_from_lotus(pipe.lotus).to_dict()))
    out_dir = tmp_path / "out"
    code = main(["build", str(tree_file), "--trunks", "all", "--out", str(out_dir)])
    assert code == 0
    capsys.readouterr()
    assert (out_dir / "lotus_0.json").exists()
    assert (out_dir / "lotus_1.json").exists()
    assert not (out_dir / "lotus_2.json").exists()


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["invariants", str(bad)]) == 2
    capsys.readouterr()
    syntax = tmp_path / "syntax.json"
    syntax.write_text(json.dumps({"char": 0, "branches": {"A": "x^("}}))
    assert main(["invariants", str(syntax)]) == 2
    capsys.readouterr()
    assert main(["invariants", "--bogus-flag"]) == 1
    capsys.readouterr()
    assert main(["nonsense"]) == 1
    capsys.readouterr()


def test_cli_check_failure_exit_code(monkeypatch, capsys):
    import lotus.cli as cli_mod
    from lotus.report import CheckFailure

    def boom(pipe):
        raise CheckFailure("forced")

    monkeypatch.setattr(cli_mod, "run_checks", boom)
    code = main(["invariants", str(FIXTURES / "cusp.series.json"), "--check"])
    assert code == 3
    capsys.readouterr()


def test_report_bytes_deterministic_across_processes():
    script = (
        "from lotus.files import load_curve_spec\n"
        "from lotus.report import build_pipeline\n"
        f"spec = load_curve_spec(open({str(FIXTURES / 'threebranch.series.json')!r}).read())\n"
        "import sys; sys.stdout.write(report_json(build_report(build_pipeline(spec))))\n"
    )
    runs = [
        subprocess.run(
            [sys.executable, "-c", script], capture_output=True, text=True, check=True
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["intersections"] == {
        "A1,A2": 132,
        "A1,A3": 21,
        "A2,A3": 42,
    }
