from math import factorial

import pytest
from hypothesis import given, strategies as st

from cubarix.errors import BudgetError
from cubarix.eulerian import eulerian_B
from cubarix.pbnk import (DEF_MAX_N, gf_coefficient, pbnk_def, pbnk_gf, pbnk_rec, pbnk_step,
                          pbnk_step_table, pbnk_table, route_table)
from cubarix.polynomial import X, Poly, reverse, series_prefix

from conftest import P

TABLE = {
    0: [P(1), P(0, 1)],
    1: [P(1, 1), P(0, 4), P(0, 1, 1)],
    2: [P(1, 6, 1), P(0, 12, 4), P(0, 4, 12), P(0, 1, 6, 1)],
    3: [P(1, 23, 23, 1), P(0, 36, 56, 4), P(0, 12, 72, 12), P(0, 4, 56, 36),
        P(0, 1, 23, 23, 1)],
    4: [P(1, 76, 230, 76, 1), P(0, 108, 460, 196, 4), P(0, 36, 420, 300, 12),
        P(0, 12, 300, 420, 36), P(0, 4, 196, 460, 108), P(0, 1, 76, 230, 76, 1)],
}


@pytest.mark.parametrize("route", ["def", "rec", "gf", "step"])
@pytest.mark.parametrize("n", sorted(TABLE))
def test_published_values(route, n):
    assert route_table(n, route) == TABLE[n]


@pytest.mark.parametrize("n, k, expected", [
    (2, 1, P(0, 12, 4)), (3, 2, P(0, 12, 72, 12)), (4, 3, P(0, 12, 300, 420, 36)),
])
def test_def_examples(n, k, expected):
    assert pbnk_def(n, k) == expected


def test_rec_examples():
    assert pbnk_rec(1, 1) == X.scale(2) * pbnk_rec(0, 0) + pbnk_rec(0, 1).scale(2) == P(0, 4)
    assert pbnk_rec(3, 0) == sum(pbnk_table(2), Poly()) == P(1, 23, 23, 1)
    assert pbnk_rec(4, 5) == X * sum(pbnk_table(3), Poly())


def test_gf_examples():
    assert pbnk_gf(2, 1) == P(0, 12, 4)
    assert pbnk_gf(0, 0) == P(1)
    for n in range(6):
        assert pbnk_gf(n, n + 1) == X * eulerian_B(n)


def test_step_examples():
    assert pbnk_step(1, 1) == P(0, 12, 4)       # first case
    assert pbnk_step(2, 3) == P(0, 4, 56, 36)   # middle case
    assert pbnk_step(1, 3) == P(0, 1, 6, 1)     # last case
    assert pbnk_step_table(0) == [P(1), X]


def test_out_of_range():
    for fn in (pbnk_def, pbnk_rec, pbnk_gf):
        with pytest.raises(ValueError):
            fn(2, 4)
        with pytest.raises(ValueError):
            fn(-1, 0)
    with pytest.raises(ValueError):
        pbnk_step(1, 4)
    with pytest.raises(BudgetError):
        pbnk_def(DEF_MAX_N + 1, 0)


@pytest.mark.parametrize("n", range(5))
def test_def_series_matches_closed_form(n):
    # chain enumeration checked against the closed-form coefficients directly
    for k in range(n + 2):
        series = series_prefix(pbnk_def(n, k, budget=10 ** 4), n + 1, 12)
        assert series == [gf_coefficient(n, k, m) for m in range(13)]


@pytest.mark.parametrize("n", range(6))
def test_four_routes(n):
    rec = route_table(n, "rec")
    assert route_table(n, "def") == rec
    assert route_table(n, "gf") == rec
    assert route_table(n, "step") == rec


@given(st.integers(0, 12))
def test_pbnk_identities(n):
    table = pbnk_table(n)
    B = eulerian_B(n)
    for k, p in enumerate(table):
        assert p.is_nonnegative()
        assert p.degree == (n + 1 if k == n + 1 else n)
        assert table[n + 1 - k] == reverse(p, n + 1)
        assert pbnk_gf(n, k) == p
    assert table[0] == B
    assert table[n + 1] == X * B
    assert sum(table, Poly()) == eulerian_B(n + 1)
    assert sum(p(1) for p in table) == 2 ** (n + 1) * factorial(n + 1)
    assert pbnk_step_table(n + 1) == pbnk_table(n + 1)
