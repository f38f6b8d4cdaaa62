"""The polynomials ``p^B_{n,k}(x)`` for ``0 <= k <= n+1``.

Four routes compute them:

* :func:`pbnk_def`: h-polynomial of the relative complex ``C_{n,k}``
  (chain enumeration, the ground truth; exponential in ``n``);
* :func:`pbnk_rec`: the level-to-level recurrence, the production route;
* :func:`pbnk_gf`: ``(1-x)^(n+1)`` times the closed-form coefficient series;
* :func:`pbnk_step`: the within-level step from ``p_{n+1,k-1}`` to ``p_{n+1,k}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .complexes import c_nk
from .errors import BudgetError
from .hvector import simplicial_h
from .polynomial import ONE_MINUS_X, X, Poly

DEF_MAX_N = 6

_X_MINUS_1 = Poly([-1, 1])


def _check_k(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n + 1:
        raise ValueError(f"k must lie in 0..{n + 1}, got {k}")


def pbnk_def(n: int, k: int, budget: int | None = None) -> Poly:
    """``h(C_{n,k})``, doubled when ``1 <= k <= n``."""
    _check_k(n, k)
    if n > DEF_MAX_N:
        raise BudgetError(f"sd of the {n}-cube has {3**n - 1} vertices; the definition "
                          f"route stops at n = {DEF_MAX_N}")
    h = simplicial_h(c_nk(n, k, budget=budget), n)
    return h.scale(2) if 1 <= k <= n else h


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Poly, ...]:
    if n == 0:
        return (Poly.one(), X)
    prev = _level(n - 1)
    total = sum(prev, Poly())
    # prefix[k] = sum_{i<k} p_{n-1,i}
    prefix = [Poly()]
    for p in prev:
        prefix.append(prefix[-1] + p)
    out = [total]
    for k in range(1, n + 1):
        out.append((prefix[k] * X + (total - prefix[k])).scale(2))
    out.append(total * X)
    return tuple(out)


def pbnk_rec(n: int, k: int) -> Poly:
    """Recurrence route.

    ``p_{n+1,0} = sum_i p_{n,i}``, ``p_{n+1,n+2} = x sum_i p_{n,i}`` and, for
    ``1 <= k <= n+1``, ``p_{n+1,k} = 2x sum_{i<k} p_{n,i} + 2 sum_{i>=k} p_{n,i}``,
    seeded by ``p_{0,0} = 1``, ``p_{0,1} = x``.
    """
    _check_k(n, k)
    return _level(n)[k]


def pbnk_table(n: int) -> list[Poly]:
    """``[p_{n,0}, ..., p_{n,n+1}]`` via the recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_level(n))


def gf_coefficient(n: int, k: int, m: int) -> int:
    """Coefficient of ``x^m`` in ``p_{n,k}(x) / (1-x)^(n+1)``."""
    if k == 0:
        return (2 * m + 1) ** n
    if k == n + 1:
        return (2 * m - 1) ** n if m >= 1 else 0
    return 4 * m * (2 * m - 1) ** (k - 1) * (2 * m + 1) ** (n - k)


def pbnk_gf(n: int, k: int) -> Poly:
    """Generating-function route.

    The series is cut at ``m = n+2`` so that the product's coefficient of
    ``x^(n+2)`` is exact and can be checked to vanish.
    """
    _check_k(n, k)
    series = Poly(gf_coefficient(n, k, m) for m in range(n + 3))
    prod = ONE_MINUS_X ** (n + 1) * series
    if prod[n + 2] != 0:
        raise ArithmeticError(f"p_{n},{k}: degree n+2 coefficient {prod[n + 2]} is not zero")
    return prod.truncate(n + 1)


def pbnk_step(n: int, k: int) -> Poly:
    """``p_{n+1,k}`` from one step of the three-case relation between levels.

    For ``k >= 1`` the relation expresses ``p_{n+1,k}`` through ``p_{n+1,k-1}``
    and ``p_{n,k-1}`` (taken from :func:`pbnk_rec`). ``k = 0`` has no step and
    uses ``p_{n+1,0} = sum_i p_{n,i}``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n + 2:
        raise ValueError(f"k must lie in 0..{n + 2}, got {k}")
    if k == 0:
        return sum(pbnk_table(n), Poly())
    j = k - 1
    up, down = pbnk_rec(n + 1, j), pbnk_rec(n, j)
    if j == 0:
        return up.scale(2) + (_X_MINUS_1 * down).scale(2)
    if j <= n:
        return up + (_X_MINUS_1 * down).scale(2)
    return up.scale(Fraction(1, 2)) + _X_MINUS_1 * down


def pbnk_step_table(n: int) -> list[Poly]:
    """Level ``n`` assembled from :func:`pbnk_step` (level 0 is the seed ``(1, x)``)."""
    if n == 0:
        return [Poly.one(), X]
    return [pbnk_step(n - 1, k) for k in range(n + 2)]


ROUTES = {
    "def": pbnk_def,
    "rec": pbnk_rec,
    "gf": pbnk_gf,
    "step": lambda n, k: pbnk_step_table(n)[k],
}


def route_table(n: int, route: str) -> list[Poly]:
    if route == "step":
        return pbnk_step_table(n)
    fn = ROUTES[route]
    return [fn(n, k) for k in range(n + 2)]
