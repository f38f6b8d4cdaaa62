"""Exact real-root certificates and interlacing checks.

Nothing in here uses floating point. Roots are isolated by bisection with
Sturm sequences over the rationals; a root hit exactly by a bisection
point (or found by the rational root search) becomes a point interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Sequence

from .polynomial import Poly, coeff_to_str, gcd, to_json


# ---------------------------------------------------------------------------
# squarefree decomposition


def _yun(f: Poly) -> list[tuple[Poly, int]]:
    f = f.monic()
    df = f.derivative()
    a = gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


_RATIONAL_SEARCH_LIMIT = 10 ** 10


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _integer_coeffs(p: Poly) -> list[int]:
    den = 1
    for a in p.coeffs:
        den = den * a.denominator // _gcd_int(den, a.denominator)
    return [int(a * den) for a in p.coeffs]


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of ``p`` by the rational root theorem.

    Zero is always detected; other candidates are only tried when the
    trailing and leading integer coefficients stay below a size limit.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        shift = next(i for i, a in enumerate(p.coeffs) if a != 0)
        p = Poly(p.coeffs[shift:])
    if p.degree == 0:
        return roots
    c = _integer_coeffs(p)
    a0, an = c[0], c[-1]
    if abs(a0) > _RATIONAL_SEARCH_LIMIT or abs(an) > _RATIONAL_SEARCH_LIMIT:
        return roots
    bound = root_bound(p)
    found = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            if num > bound * den:
                continue
            for r in (Fraction(num, den), Fraction(-num, den)):
                if r not in found and _sign_at(tuple(c), r) == 0:
                    found.add(r)
    return sorted(roots + list(found))


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Monic, squarefree, pairwise coprime factors with multiplicities.

    ``p == p.lead * prod(q**m)``. Rational roots are split off as their
    own linear factors, so ``4x + 12x^2`` gives ``[(x, 1), (x + 1/3, 1)]``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no squarefree decomposition")
    out = []
    for q, m in _yun(p):
        for r in rational_roots(q):
            lin = Poly([-r, 1])
            out.append((lin, m))
            q = q.exact_div(lin)
        if q.degree > 0:
            out.append((q, m))
    out.sort(key=lambda t: (t[1], t[0].degree, t[0].coeffs))
    prod = Poly([p.lead])
    for q, m in out:
        prod = prod * q ** m
    assert prod == p, "squarefree decomposition does not multiply back"
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    return p.monic().exact_div(gcd(p, p.derivative())) if p.degree else Poly.one()


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(q: Poly) -> list[Poly]:
    seq = [q, q.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _primitive(p: Poly) -> tuple[int, ...]:
    """Integer coefficients of a positive multiple of ``p`` (same signs everywhere)."""
    c = _integer_coeffs(p)
    g = 0
    for a in c:
        g = _gcd_int(g, a)
    return tuple(a // g for a in c) if g else tuple(c)


def _sign_at(c: tuple[int, ...], t: Fraction) -> int:
    # sign of sum c_i (num/den)^i, via den^deg * p(num/den) with den > 0
    num, den = t.numerator, t.denominator
    acc = 0
    pw = 1
    for a in reversed(c):
        acc = acc * num + a * pw
        pw *= den
    return (acc > 0) - (acc < 0)


class _Sturm:
    """A Sturm sequence kept as primitive integer polynomials for fast sign queries."""

    def __init__(self, q: Poly):
        self.q = q
        self.seq = [_primitive(p) for p in sturm_sequence(q)]

    def sign(self, t: Fraction) -> int:
        return _sign_at(self.seq[0], t)

    def variations(self, t: Fraction) -> int:
        signs = [sg for sg in (_sign_at(c, t) for c in self.seq) if sg]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        return self.variations(a) - self.variations(b)


def sturm_count(q: Poly, a, b) -> int:
    """Number of distinct real roots of the squarefree ``q`` in ``(a, b)``.

    Both endpoints must be non-roots and ``a < b``.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if q(a) == 0 or q(b) == 0:
        raise ValueError("an endpoint is a root; move it")
    if gcd(q, q.derivative()).degree:
        raise ValueError("Sturm counting needs a squarefree polynomial")
    return _Sturm(q).count(a, b)


def root_bound(p: Poly) -> int:
    """An integer strictly larger than the absolute value of every root (Cauchy)."""
    lead = abs(p.lead)
    m = max((abs(a) / lead for a in p.coeffs[:-1]), default=Fraction(0))
    return int(m) + 2


# ---------------------------------------------------------------------------
# isolation


@dataclass(frozen=True)
class RootInterval:
    """A root in the open interval ``(lo, hi)``, or exactly ``lo`` when ``lo == hi``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: int  # index into the certificate's squarefree factors

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass
class RootCertificate:
    polynomial: Poly
    squarefree_factors: list[tuple[Poly, int]]
    isolating_intervals: list[RootInterval]
    real_rooted: bool

    @property
    def real_root_count(self) -> int:
        return sum(iv.multiplicity for iv in self.isolating_intervals)

    def roots_nonpositive(self) -> bool:
        return all(iv.hi <= 0 for iv in self.isolating_intervals)

    def to_json(self) -> dict:
        return {
            "polynomial": to_json(self.polynomial),
            "squarefree_factors": [{"factor": to_json(q), "multiplicity": m}
                                   for q, m in self.squarefree_factors],
            "isolating_intervals": [{"lo": coeff_to_str(iv.lo), "hi": coeff_to_str(iv.hi),
                                     "multiplicity": iv.multiplicity, "factor": iv.factor}
                                    for iv in self.isolating_intervals],
            "real_rooted": self.real_rooted,
        }


def _isolate_squarefree(s: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals (ascending) for the real roots of squarefree ``s``.

    The starting interval is symmetric, so the first bisection point is 0
    and no interval ever straddles it.
    """
    if s.degree is None or s.degree < 1:
        return []
    st = _Sturm(s)
    B = Fraction(root_bound(s))
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        cnt = st.count(a, b)
        if cnt == 0:
            continue
        if cnt == 1 and not a < 0 < b:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if st.sign(mid) != 0:
            stack += [(a, mid), (mid, b)]
            continue
        out.append((mid, mid))
        delta = (b - a) / 4
        while (st.sign(mid - delta) == 0 or st.sign(mid + delta) == 0
               or st.count(mid - delta, mid + delta) != 1):
            delta /= 2
        stack += [(a, mid - delta), (mid + delta, b)]
    out.sort()
    return out


def _linear_root(q: Poly) -> Fraction | None:
    return -q[0] / q[1] if q.degree == 1 else None


def _contains_root(q: Poly, lo: Fraction, hi: Fraction) -> bool:
    # only valid when (lo, hi) isolates one root of a multiple of q
    if lo == hi:
        return q(lo) == 0
    return q(lo) * q(hi) < 0


def isolate_real_roots(p: Poly) -> RootCertificate:
    """Isolate every distinct real root of a nonzero ``p``."""
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    cert = _isolate_cached(p)
    return RootCertificate(cert.polynomial, list(cert.squarefree_factors),
                           list(cert.isolating_intervals), cert.real_rooted)


@lru_cache(maxsize=4096)
def _isolate_cached(p: Poly) -> RootCertificate:
    factors = squarefree_decomposition(p)
    s = Poly.one()
    for q, _ in factors:
        s = s * q
    intervals = []
    for lo, hi in _isolate_squarefree(s):
        owners = [i for i, (q, _) in enumerate(factors) if _contains_root(q, lo, hi)]
        assert len(owners) == 1, "squarefree factors must be pairwise coprime"
        i = owners[0]
        r = _linear_root(factors[i][0])
        if r is not None:
            lo = hi = r
        intervals.append(RootInterval(lo, hi, factors[i][1], i))
    count = sum(iv.multiplicity for iv in intervals)
    return RootCertificate(p, factors, intervals, count == p.degree)


def is_real_rooted(p: Poly) -> RootCertificate:
    """Certificate whose ``real_rooted`` flag says whether every complex root is real.

    The zero polynomial counts as real-rooted.
    """
    if p.is_zero():
        return RootCertificate(p, [], [], True)
    return isolate_real_roots(p)


def refine(cert: RootCertificate, eps) -> RootCertificate:
    """Bisect every open interval until it is narrower than ``eps``."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    out = []
    for iv in cert.isolating_intervals:
        q = cert.squarefree_factors[iv.factor][0]
        lo, hi = iv.lo, iv.hi
        while hi - lo >= eps and lo != hi:
            mid = (lo + hi) / 2
            v = q(mid)
            if v == 0:
                lo = hi = mid
            elif (v > 0) == (q(lo) > 0):
                lo = mid
            else:
                hi = mid
        out.append(RootInterval(lo, hi, iv.multiplicity, iv.factor))
    return RootCertificate(cert.polynomial, cert.squarefree_factors, out, cert.real_rooted)


def verify_certificate(cert: RootCertificate) -> bool:
    """Re-check a certificate from scratch, independent of how it was produced."""
    p = cert.polynomial
    if p.is_zero():
        return cert.real_rooted and not cert.isolating_intervals
    prod = Poly([p.lead])
    for q, m in cert.squarefree_factors:
        if q.lead != 1 or gcd(q, q.derivative()).degree:
            return False
        prod = prod * q ** m
    if prod != p:
        return False
    ivs = cert.isolating_intervals
    for a, b in zip(ivs, ivs[1:]):
        # open intervals may share an endpoint; two equal points may not
        if a.hi > b.lo or (a.hi == b.lo and a.is_point and b.is_point):
            return False
    for iv in ivs:
        q, m = cert.squarefree_factors[iv.factor]
        if m != iv.multiplicity:
            return False
        if iv.is_point:
            if q(iv.lo) != 0:
                return False
        else:
            if sturm_count(q, iv.lo, iv.hi) != 1 or q(iv.lo) * q(iv.hi) >= 0:
                return False
    # every real root of every factor must be accounted for
    for i, (q, _) in enumerate(cert.squarefree_factors):
        B = root_bound(q)
        listed = sum(1 for iv in ivs if iv.factor == i)
        if sturm_count(q, -B, B) != listed:
            return False
    total = sum(iv.multiplicity for iv in ivs)
    return cert.real_rooted == (total == p.degree)


# ---------------------------------------------------------------------------
# interlacing


@dataclass
class InterlacingCertificate:
    """Evidence that the roots of ``p`` alternate to the left of those of ``q``.

    ``alternation_witness`` lists the distinct real roots of ``p*q`` in
    ascending order as ``(lo, hi, tag, mult_p, mult_q)`` with ``tag`` one of
    ``"p"``, ``"q"`` or ``"pq"`` (shared root).
    """

    p_cert: RootCertificate
    q_cert: RootCertificate
    common_factor: Poly
    alternation_witness: list[tuple]
    interlaces: bool
    strict: bool = False
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.interlaces

    def to_json(self) -> dict:
        return {
            "interlaces": self.interlaces,
            "strict": self.strict,
            "reason": self.reason,
            "common_factor": to_json(self.common_factor),
            "p": self.p_cert.to_json(),
            "q": self.q_cert.to_json(),
            "alternation_witness": [
                {"lo": coeff_to_str(lo), "hi": coeff_to_str(hi), "source": tag,
                 "mult_p": mp, "mult_q": mq}
                for lo, hi, tag, mp, mq in self.alternation_witness],
        }


def interlaces(p: Poly, q: Poly, require_nonpositive: bool = True) -> InterlacingCertificate:
    """Decide whether ``p`` interlaces ``q`` in the weak sense.

    With roots ``a_1 >= a_2 >= ...`` of ``p`` and ``b_1 >= b_2 >= ...`` of
    ``q`` (with multiplicity) this means ``... <= b_2 <= a_1 <= b_1``, and
    additionally ``b_1 <= 0`` unless ``require_nonpositive`` is off.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("interlacing needs nonzero polynomials")
    if p.lead <= 0 or q.lead <= 0:
        raise ValueError("interlacing needs positive leading coefficients")
    pc, qc = is_real_rooted(p), is_real_rooted(q)
    common = gcd(p, q)

    def fail(reason, witness=()):
        return InterlacingCertificate(pc, qc, common, list(witness), False, False, reason)

    if not pc.real_rooted or not qc.real_rooted:
        which = [name for name, c in (("p", pc), ("q", qc)) if not c.real_rooted]
        return fail(f"not real-rooted: {', '.join(which)}")

    witness = []
    for lo, hi in _isolate_squarefree(squarefree_part(p * q)):
        owners = [(f, m, src) for src, c in (("p", pc), ("q", qc))
                  for f, m in c.squarefree_factors if _contains_root(f, lo, hi)]
        mp = sum(m for _, m, src in owners if src == "p")
        mq = sum(m for _, m, src in owners if src == "q")
        r = _linear_root(owners[0][0])
        if r is not None:
            lo = hi = r
        tag = "pq" if mp and mq else "p" if mp else "q"
        witness.append((lo, hi, tag, mp, mq))

    if require_nonpositive and any(lo > 0 for lo, *_ in witness):
        return fail("root > 0", witness)

    # positions in descending root order, one entry per root counted with multiplicity
    alpha, beta = [], []
    for pos in range(len(witness) - 1, -1, -1):
        _, _, _, mp, mq = witness[pos]
        alpha += [pos] * mp
        beta += [pos] * mq
    if len(beta) - len(alpha) not in (0, 1):
        return fail(f"root counts {len(alpha)} (p) and {len(beta)} (q) cannot alternate",
                    witness)
    strict = True
    for i, a in enumerate(alpha):
        # a_i <= b_i
        if a > beta[i]:
            return fail(f"root {i + 1} of p lies right of root {i + 1} of q", witness)
        strict &= a != beta[i]
        # b_{i+1} <= a_i
        if i + 1 < len(beta):
            if beta[i + 1] > a:
                return fail(f"root {i + 2} of q lies right of root {i + 1} of p", witness)
            strict &= beta[i + 1] != a
    return InterlacingCertificate(pc, qc, common, witness, True, strict, None)


@dataclass
class SequenceReport:
    ok: bool
    failing_pairs: list[tuple[int, int, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_interlacing_sequence(ps: Sequence[Poly]) -> SequenceReport:
    """Does ``ps[i]`` interlace ``ps[j]`` for every ``i < j``?"""
    failing = []
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            cert = interlaces(ps[i], ps[j])
            if not cert.interlaces:
                failing.append((i, j, cert.reason))
    return SequenceReport(not failing, failing)


# ---------------------------------------------------------------------------
# unimodality and peaks


def peak_position(p: Poly) -> set[int]:
    """Indices where the coefficient sequence attains its maximum."""
    if not p.is_nonnegative():
        raise ValueError("peak positions need nonnegative coefficients")
    if p.is_zero():
        return set()
    top = max(p.coeffs)
    return {i for i, a in enumerate(p.coeffs) if a == top}


def is_unimodal(p: Poly) -> bool:
    c = list(p.coeffs)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def expected_peak(n: int, k: int) -> int:
    """Where ``p^B_{n,k}`` peaks: ``(n+1)/2`` for odd ``n``, else ``n/2`` or ``n/2 + 1``."""
    if n % 2:
        return (n + 1) // 2
    return n // 2 if k <= n // 2 else n // 2 + 1


def check_peak_law(n: int, k: int, p: Poly) -> bool:
    return is_unimodal(p) and expected_peak(n, k) in peak_position(p)


# ---------------------------------------------------------------------------
# the whole pipeline for one cubical complex


@dataclass
class CorollaryReport:
    """Outcome of :func:`certify_corollary`.

    ``status`` is ``"certified"``, ``"hypothesis fails"`` (some cubical
    h-entry is negative, so nothing is claimed) or ``"failed"``.
    """

    dimension: int
    cubical_h: Poly
    status: str
    h_sd: Poly | None = None
    eulerian: Poly | None = None
    real_root_cert: RootCertificate | None = None
    interlacing_cert: InterlacingCertificate | None = None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != "failed"

    def to_json(self) -> dict:
        out = {
            "dimension": self.dimension,
            "cubical_h": to_json(self.cubical_h),
            "status": self.status,
            "reason": self.reason,
        }
        if self.h_sd is not None:
            out["h_sd"] = to_json(self.h_sd)
            out["eulerian_B"] = to_json(self.eulerian)
            out["real_rooted"] = self.real_root_cert.to_json()
            out["interlacing"] = self.interlacing_cert.to_json()
        return out


def certify_corollary(L) -> CorollaryReport:
    """Certify that ``h(sd L)`` is real-rooted and interlaced by ``B_n``.

    Only attempted when the cubical h-vector of ``L`` is nonnegative. The
    polynomial comes from the cubical h-vector and is cross-checked against
    the f-vector formula before certification.
    """
    from .eulerian import eulerian_B
    from .hvector import cubical_h
    from .transform import h_sd_from_cubical_h, h_sd_from_f

    n = L.dimension
    h = cubical_h(L)
    if not h.is_nonnegative():
        return CorollaryReport(n, h, "hypothesis fails",
                               reason="cubical h-vector has a negative entry")
    H = h_sd_from_cubical_h(L)
    if H != h_sd_from_f(L):
        return CorollaryReport(n, h, "failed", reason="transform routes disagree")
    B = eulerian_B(n)
    rr = is_real_rooted(H)
    il = interlaces(B, H)
    report = CorollaryReport(n, h, "certified", H, B, rr, il)
    if not rr.real_rooted:
        report.status, report.reason = "failed", "h(sd L) is not real-rooted"
    elif not il.interlaces:
        report.status, report.reason = "failed", f"B_{n} does not interlace h(sd L): {il.reason}"
    return report
