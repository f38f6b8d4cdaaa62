"""Simplicial, relative, interior and normalized cubical h-polynomials."""

from __future__ import annotations

from fractions import Fraction

from .complexes import (EMPTY_FACE, CubicalFacePoset, GridCubicalComplex, RelativePair,
                        SimplicialComplex, boundary_complex, euler_char_reduced)
from .errors import ComplexError
from .polynomial import ONE_MINUS_X, ONE_PLUS_X, Poly, f_to_h, reverse


def f_polynomial(c) -> Poly:
    """``sum f_{i-1} x^i`` for a complex or relative pair."""
    return Poly(c.f_vector())


def simplicial_h(c: SimplicialComplex | RelativePair, n: int | None = None) -> Poly:
    """``sum_F x^|F| (1-x)^(n+1-|F|)`` over the (relative) faces.

    ``n`` defaults to the dimension of the ambient complex.
    """
    dim = c.dimension
    if n is None:
        n = dim
    if dim > n:
        raise ComplexError(f"complex of dimension {dim} does not fit in dimension {n}")
    return f_to_h(f_polynomial(c), n)


def interior_h(delta: SimplicialComplex, n: int | None = None) -> Poly:
    """``h(delta / boundary(delta))`` for a triangulated ball."""
    bd = boundary_complex(delta)
    return simplicial_h(RelativePair(delta, bd.faces), n)


def _as_face_set(gamma) -> frozenset:
    if gamma is None:
        return frozenset()
    faces = gamma.faces if isinstance(gamma, SimplicialComplex) else frozenset(map(frozenset, gamma))
    if not faces:
        return frozenset()
    return frozenset(faces) | {EMPTY_FACE}


def complementary_boundary(delta: SimplicialComplex, gamma) -> frozenset:
    """Faces of the subcomplex of the boundary spanned by the boundary facets not in ``gamma``.

    Returns the empty set (a void subcomplex) when every boundary facet is in ``gamma``.
    """
    bd = boundary_complex(delta)
    gam = _as_face_set(gamma)
    if not gam <= bd.faces:
        raise ComplexError("gamma is not a subcomplex of the boundary")
    # the boundary of a point is {empty face}, whose only facet is the empty face
    bd_facets = bd.facets() or [EMPTY_FACE]
    rest = [f for f in bd_facets if f not in gam]
    if not rest:
        return frozenset()
    return SimplicialComplex(rest).faces


def check_h_symmetry(delta: SimplicialComplex, gamma=None) -> bool:
    """Does ``h(delta/gamma_bar) = x^(n+1) h(delta/gamma)(1/x)`` hold?

    ``gamma`` may be a :class:`SimplicialComplex`, an iterable of faces or
    ``None`` (void); ``gamma_bar`` is built from the complementary boundary
    facets.
    """
    n = delta.dimension
    gam = _as_face_set(gamma)
    if not gam <= boundary_complex(delta).faces:
        raise ComplexError("gamma is not a subcomplex of the boundary")
    bar = complementary_boundary(delta, gam)
    lhs = simplicial_h(RelativePair(delta, bar), n)
    rhs = reverse(simplicial_h(RelativePair(delta, gam), n), n + 1)
    return lhs == rhs


def _cubical_data(L) -> tuple[int, list[int], int]:
    if not isinstance(L, (GridCubicalComplex, CubicalFacePoset)):
        raise TypeError(f"expected a cubical complex, got {type(L).__name__}")
    n = L.dimension
    if n < 0:
        raise ComplexError("the cubical h-polynomial needs a nonempty complex")
    return n, L.f_vector()[1:], euler_char_reduced(L)


def cubical_h(L) -> Poly:
    """Normalized cubical h-polynomial.

    Solves ``(1+x) h = 1 + sum_k f_k x^(k+1) ((1-x)/2)^(n-k) + (-1)^n chi x^(n+2)``
    and insists the division by ``1+x`` is exact.
    """
    n, f, chi = _cubical_data(L)
    half = ONE_MINUS_X.scale(Fraction(1, 2))
    rhs = Poly.one() + Poly.monomial(n + 2, (-1) ** n * chi)
    for k, fk in enumerate(f):
        rhs = rhs + (half ** (n - k)).shift(k + 1).scale(fk)
    h, r = divmod(rhs, ONE_PLUS_X)
    if not r.is_zero():
        raise ArithmeticError(f"(1+x) does not divide the cubical h numerator; remainder {r}")
    return h


def cubical_h_alt(L) -> Poly:
    """Cubical h-polynomial from ``sum f_k x^k = sum (h_k + h_{k+1}) x^k (x+2)^(n-k)``, ``h_0 = 1``.

    The basis ``x^k (x+2)^(n-k)`` is triangular (lowest term ``2^(n-k) x^k``),
    so the pair sums ``g_k = h_k + h_{k+1}`` come out by forward substitution.
    """
    n, f, _ = _cubical_data(L)
    basis = [(Poly([2, 1]) ** (n - k)).shift(k) for k in range(n + 1)]
    residual = Poly(f)
    g = []
    for k in range(n + 1):
        gk = residual[k] / basis[k][k]
        g.append(gk)
        residual = residual - basis[k].scale(gk)
    if not residual.is_zero():
        raise ArithmeticError("f-polynomial is not in the span of the cubical basis")
    h = [Fraction(1)]
    for gk in g:
        h.append(gk - h[-1])
    return Poly(h)
