import random

import pytest
from hypothesis import given, settings, strategies as st

from cubarix.complexes import SimplicialComplex, cube_boundary, cube_complex, cubical_cover
from cubarix.corpus import builtin_corpus, random_grid_complex, random_simplicial_complex
from cubarix.eulerian import eulerian_A, eulerian_B
from cubarix.polynomial import Poly
from cubarix.transform import (a_poly, check_proof_identity, f_side_poly, h_sd_direct,
                               h_sd_from_cubical_h, h_sd_from_f, h_sd_simplicial,
                               interval_triangulation_h, transform_routes)

from conftest import P

B3 = P(1, 23, 23, 1)


@pytest.mark.parametrize("L, expected", [
    (cube_complex(2), P(1, 6, 1)),
    (cube_boundary(3), B3),
    (cube_complex(0), P(1)),
])
def test_three_routes_on_examples(L, expected):
    assert h_sd_direct(L) == expected
    assert h_sd_from_f(L) == expected
    assert h_sd_from_cubical_h(L) == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_cone_law(n):
    assert h_sd_direct(cube_complex(n), 10 ** 4) == eulerian_B(n)
    assert h_sd_direct(cube_boundary(n), 10 ** 4) == eulerian_B(n)


def test_a_poly_examples():
    assert a_poly(cube_boundary(3)) == f_side_poly(cube_boundary(3)) == P(2, 0, 24)
    assert a_poly(cube_complex(2)) == f_side_poly(cube_complex(2)) == P(1, 4, 4)


@pytest.mark.parametrize("facets, expected", [
    ([[1, 2]], P(1, 1)),
    ([[1, 2], [2, 3], [1, 3]], P(1, 4, 1)),
    ([[1]], P(1)),
])
def test_h_sd_simplicial_examples(facets, expected):
    delta = SimplicialComplex.from_facets(facets)
    assert h_sd_simplicial(delta) == expected == h_sd_direct(delta)


def test_a3_a4():
    assert eulerian_A(3) == P(1, 4, 1)
    assert eulerian_A(4) == P(1, 11, 11, 1)


@pytest.mark.parametrize("facets, expected", [
    ([[1, 2]], P(1, 3)),
    ([[1]], P(1)),
    ([[1, 2], [2, 3], [1, 3]], P(1, 10, 1)),
])
def test_interval_triangulation(facets, expected):
    assert interval_triangulation_h(SimplicialComplex.from_facets(facets)) == expected


def test_h_sd_simplicial_rejects_empty():
    with pytest.raises(ValueError):
        h_sd_simplicial(SimplicialComplex([]))


@pytest.mark.parametrize("name, L", builtin_corpus(), ids=lambda v: v if isinstance(v, str) else "")
def test_builtin_corpus(name, L):
    routes = transform_routes(L, 10 ** 4)
    assert len(set(routes.values())) == 1, routes
    assert check_proof_identity(L)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_routes_on_random_grids(seed):
    L = random_grid_complex(random.Random(seed))
    assert len(set(transform_routes(L, 10 ** 4).values())) == 1
    assert check_proof_identity(L)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_routes_on_random_covers(seed):
    L = cubical_cover(random_simplicial_complex(random.Random(seed)))
    assert len(set(transform_routes(L, 10 ** 4).values())) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_simplicial_formula_random(seed):
    delta = random_simplicial_complex(random.Random(seed))
    assert h_sd_simplicial(delta) == h_sd_direct(delta, 10 ** 4)
