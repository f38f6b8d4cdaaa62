"""h-polynomials of barycentric subdivisions, computed several ways.

For a cubical complex ``L`` of dimension ``n`` the three routes are

* direct chain enumeration (:func:`h_sd_direct`);
* the f-vector formula with type-B Eulerian polynomials (:func:`h_sd_from_f`);
* the cubical h-vector against the ``p^B_{n,k}`` basis (:func:`h_sd_from_cubical_h`).

:func:`a_poly` exposes the polynomial in ``y`` whose agreement with
``sum f_k (2y-1)^k`` is what makes the last two routes coincide.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, barycentric_sd, cubical_cover
from .eulerian import eulerian_A, eulerian_B
from .hvector import cubical_h, simplicial_h
from .pbnk import pbnk_table
from .polynomial import ONE_MINUS_X, X, Poly

TWO_Y_MINUS_1 = Poly([-1, 2])
TWO_Y_PLUS_1 = Poly([1, 2])
FOUR_Y = Poly([0, 4])


def h_sd_direct(c, budget: int | None = None) -> Poly:
    """h-polynomial of ``sd(c)`` by enumerating chains of cells."""
    return simplicial_h(barycentric_sd(c, budget), c.dimension)


def _f(c) -> list[int]:
    return c.f_vector()[1:]


def h_sd_from_f(L) -> Poly:
    """``(1-x)^(n+1) + x sum_k f_k (1-x)^(n-k) B_k(x)``."""
    n = L.dimension
    out = ONE_MINUS_X ** (n + 1)
    for k, fk in enumerate(_f(L)):
        out = out + (X * ONE_MINUS_X ** (n - k) * eulerian_B(k)).scale(fk)
    return out


def h_sd_from_cubical_h(L) -> Poly:
    """``sum_k h_k(L) p^B_{n,k}(x)``."""
    n = L.dimension
    h = cubical_h(L)
    return sum((p.scale(h[k]) for k, p in enumerate(pbnk_table(n))), Poly())


def a_poly(L) -> Poly:
    """``a_L(y)`` built from the cubical h-vector, as a polynomial in ``y``."""
    n = L.dimension
    h = cubical_h(L)
    out = (TWO_Y_PLUS_1 ** n).scale(h[0])
    for k in range(1, n + 1):
        out = out + (FOUR_Y * TWO_Y_MINUS_1 ** (k - 1) * TWO_Y_PLUS_1 ** (n - k)).scale(h[k])
    return out + (TWO_Y_MINUS_1 ** n).scale(h[n + 1])


def f_side_poly(L) -> Poly:
    """``sum_k f_k (2y-1)^k``."""
    return sum(((TWO_Y_MINUS_1 ** k).scale(fk) for k, fk in enumerate(_f(L))), Poly())


def check_proof_identity(L) -> bool:
    return a_poly(L) == f_side_poly(L)


def h_sd_simplicial(delta: SimplicialComplex) -> Poly:
    """``(1-x)^(n+1) + x sum_k f_k (1-x)^(n-k) A_{k+1}(x)`` for a simplicial complex."""
    n = delta.dimension
    if n < 0:
        raise ValueError("need a nonempty simplicial complex")
    out = ONE_MINUS_X ** (n + 1)
    for k, fk in enumerate(_f(delta)):
        out = out + (X * ONE_MINUS_X ** (n - k) * eulerian_A(k + 1)).scale(fk)
    return out


def interval_triangulation_h(delta: SimplicialComplex, budget: int | None = None) -> Poly:
    """h-polynomial of ``sd`` of the cubical barycentric cover of ``delta``."""
    return h_sd_direct(cubical_cover(delta), budget)


def transform_routes(L, budget: int | None = None) -> dict[str, Poly]:
    """All three routes for a cubical complex, keyed ``direct``/``from_f``/``from_cubical_h``."""
    return {
        "direct": h_sd_direct(L, budget),
        "from_f": h_sd_from_f(L),
        "from_cubical_h": h_sd_from_cubical_h(L),
    }
