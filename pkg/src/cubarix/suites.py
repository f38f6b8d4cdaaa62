"""Verification batteries, one per ``verify`` suite name.

Each suite returns a :class:`SuiteResult` listing every individual check,
so callers can print a summary or drill into the failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .complexes import euler_char_reduced
from .corpus import builtin_corpus, random_cover_corpus, random_grid_corpus, random_simplicial_corpus
from .eulerian import check_worpitzky_B, eulerian_B
from .hvector import cubical_h, cubical_h_alt
from .pbnk import pbnk_gf, pbnk_rec, pbnk_step, pbnk_table
from .polynomial import X, Poly, reverse
from .realroots import certify_corollary, check_peak_law
from .transform import check_proof_identity, h_sd_direct, h_sd_simplicial, transform_routes


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)

    def add(self, label: str, ok: bool) -> None:
        self.checks.append((label, bool(ok)))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.checks if not ok]

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checks": len(self.checks),
                "failures": self.failures}


def pbnk_props(n_max: int = 12) -> SuiteResult:
    res = SuiteResult("pbnk-props")
    for n in range(n_max + 1):
        table = pbnk_table(n)
        for k, p in enumerate(table):
            res.add(f"gf n={n} k={k}", pbnk_gf(n, k) == p)
            res.add(f"nonnegative n={n} k={k}", p.is_nonnegative())
            res.add(f"degree n={n} k={k}", p.degree == (n + 1 if k == n + 1 else n))
            res.add(f"symmetry n={n} k={k}", table[n + 1 - k] == reverse(p, n + 1))
        B = eulerian_B(n)
        res.add(f"p_(n,0)=B_n n={n}", table[0] == B)
        res.add(f"p_(n,n+1)=xB_n n={n}", table[n + 1] == X * B)
        res.add(f"sum=B_(n+1) n={n}", sum(table, Poly()) == eulerian_B(n + 1))
        res.add(f"sum at 1 n={n}",
                sum(p(1) for p in table) == 2 ** (n + 1) * factorial(n + 1))
        if n < n_max:
            for k in range(n + 3):
                res.add(f"step n={n} k={k}", pbnk_step(n, k) == pbnk_rec(n + 1, k))
    return res


def worpitzky(n_max: int = 8, m_max: int = 20) -> SuiteResult:
    res = SuiteResult("worpitzky")
    for n in range(n_max + 1):
        res.add(f"n={n} M={m_max}", check_worpitzky_B(n, m_max))
    return res


def corpus(seed: int = 0, random_grids: int = 100, random_covers: int = 50) -> list:
    return (builtin_corpus(seed) + random_grid_corpus(seed, random_grids)
            + random_cover_corpus(seed + 1, random_covers))


def transform_corpus(seed: int = 0, budget: int | None = None, **kw) -> SuiteResult:
    res = SuiteResult("transform-corpus")
    for name, L in corpus(seed, **kw):
        routes = transform_routes(L, budget)
        res.add(f"{name} routes", len(set(routes.values())) == 1)
        res.add(f"{name} a_L identity", check_proof_identity(L))
        h = cubical_h(L)
        n = L.dimension
        f = L.f_vector()
        res.add(f"{name} cubical_h_alt", h == cubical_h_alt(L))
        res.add(f"{name} h0", h[0] == 1)
        res.add(f"{name} h1", h[1] == Fraction(f[1] - 2 ** n, 2 ** n))
        res.add(f"{name} h_(n+1)", h[n + 1] == (-1) ** n * euler_char_reduced(L))
    return res


def corollary(seed: int = 0, **kw) -> SuiteResult:
    res = SuiteResult("corollary")
    for name, L in corpus(seed, **kw):
        res.add(name, certify_corollary(L).ok)
    return res


def peaks(n_max: int = 10) -> SuiteResult:
    res = SuiteResult("peaks")
    for n in range(n_max + 1):
        for k, p in enumerate(pbnk_table(n)):
            res.add(f"n={n} k={k}", check_peak_law(n, k, p))
    return res


def simplicial_remark(seed: int = 0, count: int = 50, budget: int | None = None) -> SuiteResult:
    res = SuiteResult("simplicial-remark")
    for name, delta in random_simplicial_corpus(seed, count):
        res.add(name, h_sd_simplicial(delta) == h_sd_direct(delta, budget))
    return res


SUITES = {
    "pbnk-props": pbnk_props,
    "worpitzky": worpitzky,
    "transform-corpus": transform_corpus,
    "corollary": corollary,
    "peaks": peaks,
    "simplicial-remark": simplicial_remark,
}
