from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lotus.arith import (
    INF,
    cf_eval,
    cf_expand,
    coprime_part,
    p_adic_valuation,
    rat,
    rat_str,
    wedge,
)


def test_cf_expand_reference_values():
    assert cf_expand(F(4, 3)) == (1, 3)
    assert cf_expand(F(5, 3)) == (1, 1, 2)
    assert cf_expand(1) == (1,)
    assert cf_expand(F(7, 2)) == (3, 2)


def test_cf_eval_reference_values():
    assert cf_eval([1, 3]) == F(4, 3)
    assert cf_eval([0, 2]) == F(1, 2)
    assert cf_eval([1, 1, 2]) == F(5, 3)


def test_cf_errors():
    with pytest.raises(ValueError):
        cf_expand(F(0))
    with pytest.raises(ValueError):
        cf_expand(F(-2, 3))
    with pytest.raises(ValueError):
        cf_eval([])
    with pytest.raises(ValueError):
        cf_eval([2, 0])


def test_cf_round_trip_exhaustive():
    for a in range(1, 51):
        for b in range(1, 51):
            q = F(a, b)
            terms = cf_expand(q)
            assert cf_eval(terms) == q
            # canonical form
            if q != 1:
                assert terms[-1] > 1
            else:
                assert terms == (1,)
            assert terms[0] >= 0
            assert all(t >= 1 for t in terms[1:])


def test_wedge_reference_values():
    assert wedge(F(4, 3), F(5, 3)) == F(3, 2)
    assert wedge(F(1, 2), F(1, 3)) == F(1, 2)
    assert wedge(F(7, 5), F(7, 5)) == F(7, 5)


def test_wedge_symmetric_idempotent():
    values = [F(a, b) for a in range(1, 9) for b in range(1, 9)]
    for g in values:
        assert wedge(g, g) == g
    for g in values[:20]:
        for m in values[:20]:
            assert wedge(g, m) == wedge(m, g)


def test_p_adic_and_coprime_part():
    assert p_adic_valuation(12, 2) == 2
    assert coprime_part(12, 2) == 3
    assert p_adic_valuation(9, 3) == 2
    assert coprime_part(9, 3) == 1
    assert p_adic_valuation(29, 3) == 0
    assert coprime_part(29, 3) == 29
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)
    with pytest.raises(ValueError):
        p_adic_valuation(5, 4)


def test_coprime_part_multiplicative_exhaustive():
    for p in (2, 3, 5, 7):
        for n in range(1, 201):
            for m in (1, 2, 3, 5, 30, 199):
                assert coprime_part(n * m, p) == coprime_part(n, p) * coprime_part(m, p)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_coprime_part_multiplicative_property(n, m):
    for p in (2, 3, 5):
        assert coprime_part(n * m, p) == coprime_part(n, p) * coprime_part(m, p)


def test_infinity_ordering():
    assert INF > F(10**9)
    assert F(10**9) < INF
    assert INF >= INF
    assert not INF < INF
    assert INF == INF
    assert sorted([INF, F(1, 2), F(3)])[-1] is INF


def test_rat_serialization():
    assert rat_str(F(3, 2)) == "3/2"
    assert rat_str(F(4, 2)) == "2"
    assert rat_str(INF) == "inf"
    assert rat("3/2") == F(3, 2)
    assert rat("7") == F(7)
    assert rat("inf") is INF
