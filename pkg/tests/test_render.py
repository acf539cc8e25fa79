from __future__ import annotations

from lotus.ewtree import ew_from_lotus
from lotus.fixtures import cusp_lotus, three_branch_lotus
from lotus.render import (
    dot_dual_graph,
    dot_proximity_graph,
    dot_tree,
    svg_lotus,
    tikz_lotus,
)


def test_tikz_cusp_structure():
    out = tikz_lotus(cusp_lotus())
    assert out.count("fill=pink") == 3  # three petals
    arrowed = [line for line in out.splitlines() if "[->" in line]
    assert len(arrowed) == 1  # only the branch base edge carries an arrowhead
    assert "\\begin{tikzpicture}" in out and "\\end{tikzpicture}" in out
    # exact rational coordinates, never decimal floats
    import re

    for coord in re.findall(r"\(([-0-9/,]*)\)", out):
        assert re.fullmatch(r"-?\d+(/\d+)?,-?\d+(/\d+)?", coord), coord


def test_dot_dual_graph_weights():
    out = dot_dual_graph(cusp_lotus())
    assert "weight=-1" in out
    assert "weight=-2" in out
    assert "weight=-3" in out
    assert out.startswith("graph dual")


def test_dot_proximity_cusp_triangle():
    out = dot_proximity_graph(cusp_lotus())
    # triangle on the three exceptional vertices
    assert out.count(" -- ") == 3


def test_svg_renders():
    out = svg_lotus(three_branch_lotus())
    assert out.startswith("<svg")
    assert out.count("<polygon") == 10


def test_dot_tree():
    out = dot_tree(ew_from_lotus(cusp_lotus()))
    assert "digraph" in out
    assert "3/2" in out
