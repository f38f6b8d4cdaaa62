"""Eulerian polynomials of type A and type B.

Each is available through two unrelated routes: exhaustive descent
counting (vectorised with numpy, but still visiting every permutation)
and the polynomial part of the Worpitzky generating function.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .polynomial import ONE_MINUS_X, Poly, series_prefix

DESCENTS_MAX_B = 9
DESCENTS_MAX_A = 10


def _permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)


def _descents_B(n: int) -> Poly:
    if n == 0:
        return Poly.one()
    perms = _permutations(n)
    signs = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int8)
    counts = np.zeros(n + 1, dtype=np.int64)
    chunk = max(1, 4_000_000 // (len(signs) * n))
    for start in range(0, len(perms), chunk):
        w = perms[start:start + chunk, None, :] * signs[None, :, :]
        w = w.reshape(-1, n)
        # w(0) := 0 in front of every word
        w = np.concatenate([np.zeros((len(w), 1), dtype=np.int8), w], axis=1)
        des = (w[:, :-1] > w[:, 1:]).sum(axis=1)
        counts += np.bincount(des, minlength=n + 1)
    return Poly(int(c) for c in counts)


def _descents_A(n: int) -> Poly:
    perms = _permutations(n)
    des = (perms[:, :-1] > perms[:, 1:]).sum(axis=1)
    return Poly(int(c) for c in np.bincount(des, minlength=n))


@lru_cache(maxsize=None)
def _genfunc_B(n: int) -> Poly:
    # B_n(x) = (1-x)^(n+1) * sum_m (2m+1)^n x^m, polynomial part of degree n
    series = Poly((2 * m + 1) ** n for m in range(n + 2))
    prod = ONE_MINUS_X ** (n + 1) * series
    assert prod[n + 1] == 0
    return prod.truncate(n)


@lru_cache(maxsize=None)
def _genfunc_A(n: int) -> Poly:
    # A_n(x) = (1-x)^(n+1) * sum_m (m+1)^n x^m, degree n-1
    series = Poly((m + 1) ** n for m in range(n + 1))
    prod = ONE_MINUS_X ** (n + 1) * series
    assert prod[n] == 0
    return prod.truncate(n - 1)


def eulerian_B(n: int, route: str = "genfunc") -> Poly:
    """Type-B Eulerian polynomial ``B_n(x)``.

    ``route="descents"`` counts descents of all ``2^n n!`` signed
    permutations, with a descent at ``i`` in ``0..n-1`` whenever
    ``w(i) > w(i+1)`` and ``w(0) = 0``. ``route="genfunc"`` uses the
    type-B Worpitzky series ``sum (2m+1)^n x^m``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if route == "genfunc":
        return _genfunc_B(n)
    if route == "descents":
        if n > DESCENTS_MAX_B:
            raise BudgetError(
                f"descent enumeration of B_{n} visits {2**n}*{n}! signed permutations; "
                "use route='genfunc'")
        return _descents_B(n)
    raise ValueError(f"unknown route {route!r}")


def eulerian_A(n: int, route: str = "genfunc") -> Poly:
    """Classical Eulerian polynomial ``A_n(x)``, the descent polynomial of ``S_n``.

    ``A_1 = 1``, ``A_3 = 1 + 4x + x^2``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if route == "genfunc":
        return _genfunc_A(n)
    if route == "descents":
        if n > DESCENTS_MAX_A:
            raise BudgetError(
                f"descent enumeration of A_{n} visits {n}! permutations; use route='genfunc'")
        return _descents_A(n)
    raise ValueError(f"unknown route {route!r}")


def check_worpitzky_B(n: int, M: int) -> bool:
    """True iff the first ``M+1`` coefficients of ``B_n/(1-x)^(n+1)`` are ``(2m+1)^n``."""
    prefix = series_prefix(eulerian_B(n), n + 1, M)
    return prefix == [(2 * m + 1) ** n for m in range(M + 1)]
