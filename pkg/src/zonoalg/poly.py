"""Multivariate polynomials with exact rational coefficients.

Exponent order everywhere is graded lexicographic: lower total degree first,
and within one degree ``t1^d`` before ``t1^(d-1) t2`` and so on.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping


class InsufficientTruncation(ValueError):
    pass


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Exponent vectors of total degree ``d`` in ``n`` variables, graded-lex."""
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {e: i for i, e in enumerate(monomials(n, d))}


def monomials_upto(n: int, d: int) -> list:
    return [e for k in range(d + 1) for e in monomials(n, k)]


def exp_factorial(e) -> int:
    return prod(factorial(a) for a in e)


def grlex_key(e):
    return (sum(e), tuple(-a for a in e))


class MPoly:
    """A polynomial in ``n`` variables stored as ``{exponent: Fraction}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    t[tuple(e)] = c
        self.terms = t

    # constructors
    @classmethod
    def const(cls, n: int, c=1) -> "MPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def var(cls, n: int, i: int) -> "MPoly":
        return cls(n, {tuple(int(j == i) for j in range(n)): 1})

    @classmethod
    def linear(cls, y, c=0) -> "MPoly":
        """The affine form ``t -> y.t - c``."""
        n = len(y)
        terms = {tuple(int(j == i) for j in range(n)): Fraction(a) for i, a in enumerate(y)}
        if c:
            terms[(0,) * n] = -Fraction(c)
        return cls(n, terms)

    @classmethod
    def from_vector(cls, n: int, d: int, vec) -> "MPoly":
        return cls(n, dict(zip(monomials(n, d), vec)))

    # basic protocol
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({render(self)})"

    def __str__(self):
        return render(self)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MPoly(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.n, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MPoly(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # structure
    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def lowest_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def component(self, d: int) -> "MPoly":
        return MPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def vector(self, d: int) -> list:
        """Coefficients of the degree-``d`` component on ``monomials(n, d)``."""
        return [self.terms.get(e, Fraction(0)) for e in monomials(self.n, d)]

    def coefficient(self, e) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def __call__(self, point) -> Fraction:
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * prod((p**a for p, a in zip(point, e)), start=Fraction(1))
        return total

    def derivative(self, i: int, k: int = 1) -> "MPoly":
        t = {}
        for e, c in self.terms.items():
            if e[i] < k:
                continue
            f = prod(range(e[i] - k + 1, e[i] + 1))
            ne = e[:i] + (e[i] - k,) + e[i + 1 :]
            t[ne] = t.get(ne, 0) + c * f
        return MPoly(self.n, t)


def linform(y) -> MPoly:
    """``p_y(t) = y . t``."""
    return MPoly.linear(y)


def product_pY(columns, Y: Iterable[int], lam=None, n: int | None = None) -> MPoly:
    """``p_{Y,lam} = prod_{y in Y} (y . t - lam_y)``; homogeneous when ``lam`` is None."""
    Y = list(Y)
    if n is None:
        n = len(columns[0])
    out = MPoly.const(n, 1)
    for i in Y:
        if not 0 <= i < len(columns):
            raise IndexError(f"bad column index {i}")
        c = 0 if lam is None else lam[i]
        out = out * MPoly.linear(columns[i], c)
    return out


def product_of_vectors(vectors, n: int) -> MPoly:
    out = MPoly.const(n, 1)
    for v in vectors:
        out = out * MPoly.linear(v)
    return out


def diff_apply(q: MPoly, p: MPoly) -> MPoly:
    """``q(D) p``."""
    if q.n != p.n:
        raise ValueError("variable count mismatch")
    out = {}
    for eq, cq in q.terms.items():
        for ep, cp in p.terms.items():
            if any(a > b for a, b in zip(eq, ep)):
                continue
            f = prod(prod(range(b - a + 1, b + 1)) for a, b in zip(eq, ep))
            e = tuple(b - a for a, b in zip(eq, ep))
            out[e] = out.get(e, 0) + cq * cp * f
    return MPoly(p.n, out)


class TruncatedSeries:
    """A power series ``sum c_b t^b`` known up to (and including) degree ``order``."""

    def __init__(self, n: int, order: int, coeffs: Mapping):
        self.n = n
        self.order = order
        self.coeffs = {tuple(e): Fraction(c) for e, c in coeffs.items() if c and sum(e) <= order}

    @classmethod
    def exponential(cls, alpha, order: int) -> "TruncatedSeries":
        """``e_alpha(t) = exp(alpha . t)`` with ``c_b = alpha^b / b!``."""
        alpha = [Fraction(a) for a in alpha]
        n = len(alpha)
        coeffs = {}
        for e in monomials_upto(n, order):
            num = prod((a**k for a, k in zip(alpha, e)), start=Fraction(1))
            coeffs[e] = num / exp_factorial(e)
        return cls(n, order, coeffs)

    @classmethod
    def from_poly(cls, p: MPoly, order: int | None = None) -> "TruncatedSeries":
        return cls(p.n, p.degree if order is None else order, p.terms)

    def vector_upto(self, d: int) -> list:
        return [self.coeffs.get(e, Fraction(0)) for e in monomials_upto(self.n, d)]


def pairing(p: MPoly, f) -> Fraction:
    """``<p, f> = (p(D) f)(0)``; ``f`` may be a polynomial or truncated series."""
    if isinstance(f, TruncatedSeries):
        if p.degree > f.order:
            raise InsufficientTruncation(f"series known to degree {f.order} < deg p = {p.degree}")
        coeffs = f.coeffs
    else:
        coeffs = f.terms
    total = Fraction(0)
    for e, c in p.terms.items():
        fc = coeffs.get(e)
        if fc:
            total += c * fc * exp_factorial(e)
    return total


def least(f) -> MPoly:
    """Lowest-degree nonzero homogeneous component (0 for 0)."""
    if isinstance(f, TruncatedSeries):
        f = MPoly(f.n, f.coeffs)
    if not f:
        return MPoly.zero(f.n)
    return f.component(f.lowest_degree)


def most(p: MPoly) -> MPoly:
    if not p:
        return MPoly.zero(p.n)
    return p.component(p.degree)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: MPoly) -> str:
    """Canonical text: graded-lex terms, coefficients as integers or ``p/q``.

    Example: ``1 - 2*t1 + 1/2*t1^2*t2``.
    """
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, key=grlex_key):
        c = p.terms[e]
        mono = "*".join(
            f"t{i + 1}" if a == 1 else f"t{i + 1}^{a}" for i, a in enumerate(e) if a
        )
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _fmt(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt(a)}*{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
