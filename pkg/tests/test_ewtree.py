from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from lotus.arith import INF, Infinity
from lotus.ewtree import (
    EWTree,
    canonical_trunk_decomposition,
    complete,
    contact_complexity,
    ew_from_lotus,
    invert_semigroup,
    is_complete,
    is_minimal_generating,
    lotus_from_trunks,
    milnor_from_char_exponents,
    milnor_from_tree,
    semigroup_from_char_exponents,
    semigroup_from_lotus,
    semigroup_from_tree,
    tripod_center,
    tripod_intersection,
    trunk_decompositions,
    ultrametric,
)
from lotus.fixtures import (
    branch_lotus,
    char2_lotus,
    char3_cusp_lotus,
    cusp_lotus,
    nonminimal_lotus,
    three_branch_lotus,
)
from lotus.invariants import delta, intersection_via_multiplicities
from lotus.series import ew_from_series


def tree_shape(tree):
    """(exponent, index) decorations keyed by leaf labels, for exact asserts."""
    out = {}
    for leaf in tree.leaves():
        path = tree.path(leaf)
        out[tree.labels.get(leaf)] = [
            (tree.exponents[v], tree.edge_index[v]) for v in path[1:]
        ]
    return out


def test_ew_from_cusp():
    tree = ew_from_lotus(cusp_lotus())
    shape = tree_shape(tree)
    assert shape["A"] == [(F(3, 2), 1), (INF, 2)]
    assert shape["L1"] == [(F(3, 2), 1), (INF, 1)]


def test_ew_from_branch_fixture():
    tree = ew_from_lotus(branch_lotus())
    shape = tree_shape(tree)
    assert shape["A1"] == [(F(3, 2), 1), (F(13, 6), 2), (INF, 6)]
    assert shape["L2"] == [(F(3, 2), 1), (F(13, 6), 2), (INF, 2)]
    assert shape["L1"] == [(F(3, 2), 1), (INF, 1)]


def test_ew_from_three_branch_fixture():
    tree = ew_from_lotus(three_branch_lotus())
    shape = tree_shape(tree)
    assert shape["A1"] == [(F(3, 2), 1), (F(2), 2), (F(13, 6), 2), (INF, 6)]
    assert shape["A2"] == [
        (F(3, 2), 1),
        (F(2), 2),
        (F(13, 6), 2),
        (F(7, 3), 2),
        (F(29, 12), 6),
        (INF, 12),
    ]
    assert shape["A3"] == [(F(3, 2), 1), (F(2), 2), (INF, 2)]
    assert shape["L3"] == [
        (F(3, 2), 1),
        (F(2), 2),
        (F(13, 6), 2),
        (F(7, 3), 2),
        (F(29, 12), 6),
        (INF, 6),
    ]


def test_ew_from_char3_cusp():
    tree = ew_from_lotus(char3_cusp_lotus())
    shape = tree_shape(tree)
    assert shape["A"] == [(F(2, 3), 1), (INF, 3)]
    assert shape["L1"] == [(F(2, 3), 1), (INF, 1)]


def test_characteristic_exponents_from_tree():
    tree = ew_from_lotus(three_branch_lotus())
    assert tree.characteristic_exponents("A1") == [F(3, 2), F(13, 6)]
    assert tree.characteristic_exponents("A2") == [F(3, 2), F(7, 3), F(29, 12)]
    assert tree.characteristic_exponents("A3") == [F(3, 2)]
    assert tree.characteristic_exponents("L2") == [F(3, 2)]


def test_completion_of_three_branch_series_tree():
    stripped = ew_from_series(
        {
            "A1": "x^(3/2) + x^(13/6)",
            "A2": "x^(3/2) + x^(7/3) + x^(29/12)",
            "A3": "x^(3/2) + x^2",
        }
    )
    assert not is_complete(stripped)
    completed = complete(stripped)
    assert is_complete(completed)
    # Three auxiliary leaves, attached at exponents 3/2, 7/3 and 29/12.
    attach = {
        completed.exponents[completed.parent[leaf]]
        for leaf in completed.leaves()
        if completed.labels[leaf].startswith("L")
    }
    assert attach == {F(3, 2), F(7, 3), F(29, 12)}
    assert completed.isomorphic(ew_from_lotus(three_branch_lotus()))
    # idempotent
    assert complete(completed).isomorphic(completed)


def test_completion_single_branch():
    tree = ew_from_series({"A": "x^(3/2)"})
    completed = complete(tree)
    aux = [leaf for leaf in completed.leaves() if not completed.arrowheads & {leaf}]
    assert len(aux) == 1
    assert completed.isomorphic(ew_from_lotus(cusp_lotus()))


def test_trunk_decomposition_counts():
    assert len(list(trunk_decompositions(ew_from_lotus(cusp_lotus())))) == 1
    assert len(list(trunk_decompositions(ew_from_lotus(branch_lotus())))) == 1
    assert len(list(trunk_decompositions(ew_from_lotus(three_branch_lotus())))) == 2


def test_trunk_decomposition_requires_complete():
    stripped = ew_from_series({"A1": "x^(3/2) + x^(13/6)"})
    with pytest.raises(ValueError):
        list(trunk_decompositions(stripped))


def test_trunk_decomposition_path_tree():
    # A bare segment from the root to one smooth leaf decomposes uniquely.
    tree = complete(ew_from_series({"A": "x"}))
    assert len(list(trunk_decompositions(tree))) == 1


def test_contact_strictly_increasing_where_exponent_grows():
    rng = random.Random(777)
    done = 0
    while done < 15:
        branches = random_series_bundle(rng, rng.randint(1, 3))
        try:
            tree = ew_from_series(branches)
        except ValueError:
            continue
        for leaf in tree.leaves():
            path = tree.path(leaf)
            values = [contact_complexity(tree, v) for v in path[:-1]]
            assert values == sorted(set(values)), "contact must strictly increase"
            for v in path[1:-1]:
                if tree.edge_index[v] == 1:
                    assert contact_complexity(tree, v) == tree.exponents[v]
        done += 1


def test_lotus_from_trunks_branch_fixture():
    tree = ew_from_lotus(branch_lotus())
    rebuilt = lotus_from_trunks(tree, canonical_trunk_decomposition(tree))
    assert rebuilt.isomorphic(branch_lotus())


def test_lotus_from_trunks_both_decompositions():
    tree = ew_from_lotus(three_branch_lotus())
    decs = list(trunk_decompositions(tree))
    assert len(decs) == 2
    canonical = lotus_from_trunks(tree, decs[0])
    alternate = lotus_from_trunks(tree, decs[1])
    assert canonical.isomorphic(three_branch_lotus())
    assert not alternate.isomorphic(canonical)
    # Both round-trip to the same tree.
    assert ew_from_lotus(canonical).isomorphic(tree)
    assert ew_from_lotus(alternate).isomorphic(tree)


def test_contact_complexity_values():
    tree = ew_from_lotus(three_branch_lotus())
    by_exp = {}
    for node in tree.nodes():
        e = tree.exponents[node]
        if not isinstance(e, Infinity) and node != tree.root:
            by_exp[e] = contact_complexity(tree, node)
    assert by_exp[F(3, 2)] == F(3, 2)
    assert by_exp[F(2)] == F(7, 4)
    assert by_exp[F(13, 6)] == F(11, 6)
    assert by_exp[F(7, 3)] == F(23, 12)
    assert by_exp[F(29, 12)] == F(139, 72)
    assert contact_complexity(tree, tree.root) == 0


def test_contact_complexity_edge_point():
    tree = ew_from_lotus(cusp_lotus())
    node = [v for v in tree.nodes() if tree.exponents[v] == F(3, 2)][0]
    # Any point in the index-1 region has contact equal to its exponent.
    assert contact_complexity(tree, (node, F(5, 4))) == F(5, 4)
    leaf = tree.leaf_by_label("A")
    assert contact_complexity(tree, (leaf, F(7, 4))) == F(3, 2) + F(1, 8)


def test_tripod_values():
    tree = ew_from_lotus(three_branch_lotus())
    assert tripod_intersection(tree, "A1", "A2") == 132
    assert tripod_intersection(tree, "A1", "A3") == 21
    assert tripod_intersection(tree, "A2", "A3") == 42
    assert ultrametric(tree, "A1", "A2") == F(6 * 12, 132)
    with pytest.raises(ValueError):
        tripod_intersection(tree, "A1", "A1")


def test_tripod_char2_lotus_tree():
    tree = ew_from_lotus(char2_lotus())
    center = tripod_center(tree, "A1", "A2")
    assert tree.exponents[center] == F(5, 2)
    assert contact_complexity(tree, center) == 2
    assert tripod_intersection(tree, "A1", "A2") == 8


def test_semigroup_from_char_exponents():
    assert semigroup_from_char_exponents([F(3, 2)]).generators == (2, 3)
    data = semigroup_from_char_exponents([F(3, 2), F(13, 6)])
    assert data.generators == (6, 9, 22)
    assert data.generic
    coprime = semigroup_from_char_exponents([F(7, 5)])
    assert coprime.generators == (5, 7)


def test_semigroup_closed_form_matches_recursion_randomized():
    rng = random.Random(4242)
    for _ in range(60):
        g = rng.randint(1, 4)
        alphas = []
        value = F(1)
        for _ in range(g):
            value += F(rng.randint(1, 12), rng.randint(1, 12))
            alphas.append(value)
        try:
            data = semigroup_from_char_exponents(alphas)
        except ValueError:
            continue
        # construction asserts recursion == closed form internally
        assert len(data.generators) == len(data.alphas) + 1
        assert data.milnor() >= 0


def test_semigroup_from_tree_values():
    assert semigroup_from_tree(ew_from_lotus(branch_lotus()), "A1").generators == (6, 9, 22)
    assert semigroup_from_tree(ew_from_lotus(cusp_lotus()), "A").generators == (2, 3)


def test_semigroup_from_lotus_values():
    assert semigroup_from_lotus(cusp_lotus(), "A") == {
        "generators": (2, 3),
        "minimal": True,
    }
    assert semigroup_from_lotus(branch_lotus(), "A1") == {
        "generators": (6, 9, 22),
        "minimal": True,
    }
    result = semigroup_from_lotus(nonminimal_lotus(), "A")
    assert result["generators"] == (2, 2, 3)
    assert result["minimal"] is False


def test_minimal_generating():
    assert is_minimal_generating([2, 3])
    assert not is_minimal_generating([2, 2, 3])
    assert not is_minimal_generating([2, 4, 7])
    assert is_minimal_generating([6, 9, 22])


def test_invert_semigroup():
    assert invert_semigroup([3, 29]) == [F(29, 3)]
    assert invert_semigroup([6, 9, 26]) == [F(3, 2), F(17, 6)]
    assert invert_semigroup([2, 3]) == [F(3, 2)]
    # round trip on random valid sequences
    rng = random.Random(11)
    for _ in range(40):
        g = rng.randint(1, 3)
        alphas = []
        value = F(1)
        for _ in range(g):
            value += F(rng.randint(1, 9), rng.randint(1, 9))
            alphas.append(value)
        try:
            gens = semigroup_from_char_exponents(alphas).generators
        except ValueError:
            continue
        assert invert_semigroup(list(gens)) == alphas


def test_milnor_formulas_agree():
    assert milnor_from_char_exponents([F(3, 2), F(13, 6)]) == 48
    assert milnor_from_char_exponents([F(3, 2)]) == 2
    tree = ew_from_lotus(branch_lotus())
    assert milnor_from_tree(tree, "A1") == 48
    # 2*delta - r + 1 with r = 1 for a single branch
    assert milnor_from_tree(tree, "A1") == 2 * delta(branch_lotus(), ["A1"])
    cusp_tree = ew_from_lotus(cusp_lotus())
    assert milnor_from_tree(cusp_tree, "A") == 2 * delta(cusp_lotus(), ["A"])


def test_non_generic_exponents_flagged():
    data = semigroup_from_char_exponents([F(2, 3)])
    assert not data.generic


def random_series_bundle(rng: random.Random, leaves: int):
    branches = {}
    for i in range(leaves):
        terms = []
        exponent = F(0)
        for _ in range(rng.randint(1, 3)):
            exponent += F(rng.randint(1, 8), rng.randint(1, 8))
            terms.append(exponent)
        body = ""
        for t in terms:
            sign = rng.choice([" + ", " - "]) if body else rng.choice(["", "-"])
            body += f"{sign}{rng.choice([1, 2, 3])}*x^({t.numerator}/{t.denominator})"
        branches[f"A{i + 1}"] = body
    return branches


def test_round_trip_random_trees():
    rng = random.Random(1234)
    done = 0
    while done < 25:
        branches = random_series_bundle(rng, rng.randint(1, 4))
        try:
            tree = ew_from_series(branches)
        except ValueError:
            continue  # coincident branches; try another bundle
        completed = complete(tree)
        for decomposition in trunk_decompositions(completed):
            lotus = lotus_from_trunks(completed, decomposition)
            assert ew_from_lotus(lotus).isomorphic(completed)
        done += 1


def test_tripod_matches_lotus_on_random_trees():
    rng = random.Random(987)
    done = 0
    while done < 20:
        branches = random_series_bundle(rng, rng.randint(2, 3))
        try:
            tree = ew_from_series(branches)
        except ValueError:
            continue
        completed = complete(tree)
        lotus = lotus_from_trunks(completed, canonical_trunk_decomposition(completed))
        for a in branches:
            for b in branches:
                if a < b:
                    assert tripod_intersection(tree, a, b) == intersection_via_multiplicities(
                        lotus, a, b
                    )
        done += 1


def test_ultrametric_three_point_condition():
    rng = random.Random(55)
    done = 0
    while done < 60:
        branches = random_series_bundle(rng, 3)
        try:
            tree = ew_from_series(branches)
        except ValueError:
            continue
        u12 = ultrametric(tree, "A1", "A2")
        u13 = ultrametric(tree, "A1", "A3")
        u23 = ultrametric(tree, "A2", "A3")
        # Ploski: the two largest of the three are equal.
        values = sorted([u12, u13, u23])
        assert values[1] == values[2]
        done += 1


def test_tree_json_round_trip():
    for lotus in (cusp_lotus(), three_branch_lotus(), char2_lotus()):
        tree = ew_from_lotus(lotus)
        again = EWTree.from_json(tree.to_json())
        assert again.isomorphic(tree)
        assert again.to_json() == tree.to_json()
