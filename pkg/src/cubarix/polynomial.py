"""Dense univariate polynomials with exact rational coefficients.

Every f-, h- and Eulerian polynomial in the package is a :class:`Poly`.
Coefficients are stored low degree first as :class:`fractions.Fraction`,
with trailing zeros stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction, str]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as an exact coefficient")


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * x**i)``.

    >>> Poly([1, 1]) * Poly([1, 1, 1, 1])
    Poly([1, 2, 2, 2, 1])
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls([1])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, i: int, c: Coeff = 1) -> Poly:
        return cls([0] * i + [c])

    # -- basic queries ------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        """Index of the last nonzero coefficient; ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    @property
    def lead(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative exponent")
        return self._c[i] if i < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __call__(self, t):
        """Exact Horner evaluation; ``t`` may be an int, Fraction or a Poly."""
        if isinstance(t, Poly):
            acc = Poly()
            for a in reversed(self._c):
                acc = acc * t + Poly([a])
            return acc
        t = _frac(t)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * t + a
        return acc

    # -- ring arithmetic ----------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-a for a in self._c])

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Coeff) -> Poly:
        c = _frac(c)
        return Poly([a * c for a in self._c])

    def shift(self, i: int) -> Poly:
        """Multiply by ``x**i``."""
        if not self._c:
            return self
        return Poly([0] * i + list(self._c))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = other.degree
        lb = other.lead
        if len(r) - 1 < db:
            return Poly(), self
        q = [Fraction(0)] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db] / lb
            q[i] = c
            if c:
                for j, b in enumerate(other._c):
                    r[i + j] -= c * b
        return Poly(q), Poly(r[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> Poly:
        return Poly([i * a for i, a in enumerate(self._c)][1:])

    def monic(self) -> Poly:
        return self.scale(1 / self.lead) if self._c else self

    def truncate(self, d: int) -> Poly:
        """Keep coefficients of degree ``<= d``."""
        return Poly(self._c[: d + 1])

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self._c)

    # -- display ------------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly([{', '.join(_fmt(a) for a in self._c)}])"

    def __str__(self) -> str:
        return pretty(self)


def _fmt(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def pretty(p: Poly, var: str = "x") -> str:
    """Render as ``1 + 23x + 23x^2 + x^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if i == 0:
            body = _fmt(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt(mag)}{mono}" if mag.denominator == 1 else f"({_fmt(mag)}){mono}"
        sign = "-" if a < 0 else "+"
        if not parts:
            parts.append(body if a > 0 else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# -- free functions -----------------------------------------------------

ONE_MINUS_X = Poly([1, -1])
ONE_PLUS_X = Poly([1, 1])
X = Poly([0, 1])


def poly_arith(p: Poly, q: Poly | None, op: str, c: Coeff | None = None) -> Poly:
    """Dispatch ``add``/``sub``/``mul``/``scale`` by name."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(c)
    raise ValueError(f"unknown operation {op!r}")


def reverse(p: Poly, d: int) -> Poly:
    """Return ``x**d * p(1/x)``.

    Raises ``ValueError`` when ``deg p > d``.
    """
    if p.is_zero():
        return p
    if p.degree > d:
        raise ValueError(f"cannot reverse degree {p.degree} polynomial within degree {d}")
    c = list(p.coeffs) + [Fraction(0)] * (d + 1 - len(p))
    return Poly(reversed(c))


def _check_bound(p: Poly, n: int, what: str) -> None:
    if n < -1:
        raise ValueError("dimension must be >= -1")
    if not p.is_zero() and p.degree > n + 1:
        raise ValueError(f"{what} of degree {p.degree} exceeds n+1 = {n + 1}")


def f_to_h(f: Poly, n: int) -> Poly:
    """``h(x) = (1-x)^(n+1) f(x/(1-x))`` for an f-polynomial of an n-dimensional complex."""
    _check_bound(f, n, "f-polynomial")
    out = Poly()
    for i, a in enumerate(f.coeffs):
        if a:
            out = out + (ONE_MINUS_X ** (n + 1 - i)).shift(i).scale(a)
    return out


def h_to_f(h: Poly, n: int) -> Poly:
    """Inverse of :func:`f_to_h`: ``f(x) = (1+x)^(n+1) h(x/(1+x))``."""
    _check_bound(h, n, "h-polynomial")
    out = Poly()
    for i, a in enumerate(h.coeffs):
        if a:
            out = out + (ONE_PLUS_X ** (n + 1 - i)).shift(i).scale(a)
    return out


def series_prefix(p: Poly, d: int, M: int) -> list[Fraction]:
    """Coefficients ``c_0..c_M`` of the power series ``p(x) / (1-x)**d``.

    Uses ``1/(1-x)^d = sum C(m+d-1, d-1) x^m``.
    """
    if M < 0:
        raise ValueError("cutoff must be nonnegative")
    if d < 0:
        raise ValueError("denominator exponent must be nonnegative")

    def binom_coeff(m: int) -> int:
        if d == 0:
            return 1 if m == 0 else 0
        return comb(m + d - 1, d - 1)

    out = []
    for m in range(M + 1):
        s = Fraction(0)
        for i in range(min(m, len(p) - 1) + 1):
            if p[i]:
                s += p[i] * binom_coeff(m - i)
        out.append(s)
    return out


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# -- JSON ---------------------------------------------------------------

def coeff_to_str(a: Fraction) -> str:
    a = Fraction(a)
    return f"{a.numerator}/{a.denominator}"


def to_json(p: Poly) -> list[str]:
    """``["1/1", "23/1", ...]``; index is the exponent."""
    return [coeff_to_str(a) for a in p.coeffs]


def from_json(data: Sequence[str | int]) -> Poly:
    return Poly(Fraction(a) for a in data)
