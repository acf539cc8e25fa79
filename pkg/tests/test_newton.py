from __future__ import annotations

from fractions import Fraction as F
from math import gcd

import pytest

from lotus.arith import INF, cf_expand, wedge
from lotus.newton import (
    lattice_newton_lotus_oracle,
    lattice_petal_shape,
    newton_lotus,
    petal_parent_shape,
)


def slopes_up_to(bound: int) -> list[F]:
    return sorted(
        F(a, b) for a in range(1, bound + 1) for b in range(1, bound + 1) if gcd(a, b) == 1
    )


def oracle_petals(gamma: F, cache={}):
    if gamma not in cache:
        cache[gamma] = lattice_newton_lotus_oracle([gamma])["petals"]
    return cache[gamma]


def test_newton_lotus_reference_examples():
    lot43, marks = newton_lotus([F(4, 3)])
    assert len(lot43.petals) == 4
    assert marks[F(4, 3)] == lot43.petals[-1].apex
    lot53, _ = newton_lotus([F(5, 3)])
    assert len(lot53.petals) == 4
    glued, marks = newton_lotus([F(4, 3), F(5, 3)])
    # gluing shares the lotus of 4/3 /\ 5/3 = 3/2, which has 3 petals
    assert len(glued.petals) == 4 + 4 - 3
    assert set(marks) == {F(4, 3), F(5, 3)}


def test_newton_lotus_degenerate_slopes():
    lot, marks = newton_lotus([F(0)])
    assert not lot.petals
    assert marks[F(0)] == lot.initial_vertex
    lot, marks = newton_lotus([INF])
    assert not lot.petals
    assert marks[INF] == lot.base_edges[0][1]
    with pytest.raises(ValueError):
        newton_lotus([])


def test_oracle_hand_enumerations():
    half = lattice_newton_lotus_oracle([F(1, 2)])
    assert half["petals"] == frozenset(
        {
            frozenset({(1, 0), (0, 1), (1, 1)}),
            frozenset({(1, 0), (1, 1), (2, 1)}),
        }
    )
    third = lattice_newton_lotus_oracle([F(1, 3)])
    assert len(third["petals"]) == 3
    assert third["marks"][F(1, 3)] == (3, 1)
    one = lattice_newton_lotus_oracle([F(1)])
    assert one["petals"] == frozenset({frozenset({(1, 0), (0, 1), (1, 1)})})
    assert one["marks"][F(1)] == (1, 1)
    assert lattice_newton_lotus_oracle([F(0)])["petals"] == frozenset()


def test_petal_count_identity_vs_oracle():
    for gamma in slopes_up_to(12):
        expected = sum(cf_expand(gamma))
        lot, _ = newton_lotus([gamma])
        assert len(lot.petals) == expected
        assert len(oracle_petals(gamma)) == expected


def test_combinatorial_shape_matches_oracle():
    for gamma in slopes_up_to(9):
        lot, _ = newton_lotus([gamma])
        assert petal_parent_shape(lot) == lattice_petal_shape(oracle_petals(gamma))


def test_gluing_law_exhaustive():
    slopes = slopes_up_to(12)
    petal_sets = {g: oracle_petals(g) for g in slopes}
    for i, g in enumerate(slopes):
        for m in slopes[i:]:
            shared = petal_sets[g] & petal_sets[m]
            assert shared == oracle_petals(wedge(g, m))
    # the union law, on a diagonal sample of pairs
    for i, g in enumerate(slopes):
        m = slopes[(7 * i + 3) % len(slopes)]
        union = lattice_newton_lotus_oracle([g, m])["petals"]
        assert union == petal_sets[g] | petal_sets[m]


def test_marked_points_are_primitive():
    for gamma in slopes_up_to(6):
        marks = lattice_newton_lotus_oracle([gamma])["marks"]
        x, y = marks[gamma]
        assert gcd(x, y) == 1
        assert F(y, x) == gamma
