"""Zonotopes, generic hyperplane arrangements and least-space interpolation."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from . import exactla, matroid
from .matroid import ExternalFrame, GroundSet
from .poly import exp_factorial, monomials
from .spaces import GradedPolySpace

log = logging.getLogger(__name__)


class GenericityFailure(RuntimeError):
    pass


class TruncationTooLow(ValueError):
    pass


class WrongGroundSet(ValueError):
    pass


def _dot(a, b):
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


# -- zonotope ------------------------------------------------------------


@dataclass(frozen=True)
class Slab:
    normal: tuple
    lower: int
    upper: int


@dataclass(frozen=True)
class ZonotopeH:
    n: int
    slabs: tuple

    def contains(self, point, closed: bool = True) -> bool:
        for s in self.slabs:
            v = _dot(s.normal, point)
            if closed:
                if v < s.lower or v > s.upper:
                    return False
            elif v <= s.lower or v >= s.upper:
                return False
        return True


def zonotope_h(X: GroundSet) -> ZonotopeH:
    """Z(X) as the intersection of one slab per facet normal."""
    slabs = []
    for H in matroid.facet_hyperplanes(X):
        vals = [sum(a * b for a, b in zip(H.normal, x)) for x in X.columns]
        slabs.append(Slab(H.normal, sum(min(0, v) for v in vals), sum(max(0, v) for v in vals)))
    return ZonotopeH(X.n, tuple(slabs))


def contains(Z: ZonotopeH, point, closed: bool = True) -> bool:
    return Z.contains(point, closed)


def _box(X: GroundSet):
    lo = [sum(min(0, x[i]) for x in X.columns) for i in range(X.n)]
    hi = [sum(max(0, x[i]) for x in X.columns) for i in range(X.n)]
    return lo, hi


def lattice_points(X: GroundSet, closed: bool = True) -> list:
    """Integer points of the closed zonotope, or of its interior."""
    Z = zonotope_h(X)
    lo, hi = _box(X)
    return [
        p
        for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        if Z.contains(p, closed)
    ]


def volume(X: GroundSet) -> Fraction:
    """``sum over bases of |det B|``."""
    return sum(
        (abs(exactla.det([X.columns[i] for i in B])) for B in matroid.bases(X)), Fraction(0)
    )


def generic_t(X: GroundSet, seed: int = 0, max_tries: int = 100) -> tuple:
    """A shift ``t`` with ``eta_H . t`` non-integral for every facet normal."""
    normals = [H.normal for H in matroid.facet_hyperplanes(X)]
    for k in range(seed, seed + max_tries):
        q = 5 + 2 * k
        t = tuple(Fraction(1, q ** (i + 1)) + Fraction(i, q) for i in range(X.n))
        if is_generic_t(normals, t):
            return t
    raise GenericityFailure("no generic shift found")


def is_generic_t(normals, t) -> bool:
    return all(_dot(eta, t).denominator != 1 for eta in normals)


def zxt(X: GroundSet, t) -> list:
    """``{alpha in Z^n : t - alpha in Z(X)}`` for a generic shift ``t``."""
    normals = [H.normal for H in matroid.facet_hyperplanes(X)]
    t = tuple(Fraction(v) for v in t)
    if not is_generic_t(normals, t):
        raise GenericityFailure(f"t = {t} lies on a lattice translate of a facet hyperplane")
    Z = zonotope_h(X)
    lo, hi = _box(X)
    ranges = [range(ceil(ti - b), floor(ti - a) + 1) for ti, a, b in zip(t, lo, hi)]
    return [
        a
        for a in itertools.product(*ranges)
        if Z.contains([ti - ai for ti, ai in zip(t, a)], closed=True)
    ]


# -- hyperplane arrangements -------------------------------------------


@dataclass(frozen=True)
class ArrangementData:
    ground: GroundSet
    lam: tuple
    vertex_of: dict  # basis (index tuple) -> rational point
    seed: int
    rejected: int  # candidates that failed the certificate before this one


def _vertices(G: GroundSet, lam) -> dict:
    out = {}
    for B in matroid.bases(G):
        rows = [list(G.columns[i]) for i in B]
        v = exactla.solve(rows, [lam[i] for i in B])
        out[B] = tuple(v)
    return out


def certify(G: GroundSet, lam, vertex_of: dict) -> bool:
    """``p_{x,lam}(v_B) != 0`` for every basis B and every x outside B."""
    if not any(lam):
        return False
    for B, v in vertex_of.items():
        bs = set(B)
        for x in range(G.N):
            if x not in bs and _dot(G.columns[x], v) == lam[x]:
                return False
    return True


def generic_lambda(G: GroundSet, seed: int = 0, max_tries: int = 50) -> ArrangementData:
    """Offsets ``lam_i = base^(i+1)`` for ``base = seed + 2, seed + 3, ...``, certified."""
    for k in range(max_tries):
        base = Fraction(seed + 2 + k)
        lam = tuple(base ** (i + 1) for i in range(G.N))
        verts = _vertices(G, lam)
        if certify(G, lam, verts):
            if k:
                log.debug("generic_lambda: %d candidate(s) rejected", k)
            return ArrangementData(G, lam, verts, seed + k, k)
    raise GenericityFailure(f"no generic offsets after {max_tries} candidates")


def vertex_subsets(A: ArrangementData, which: str = "all", frame: ExternalFrame | None = None) -> list:
    """The vertices ``v_B`` for B in the bases / external bases / internal bases."""
    if which == "all":
        fam = matroid.bases(A.ground)
    elif which == "external":
        if frame is None or frame.combined != A.ground:
            raise WrongGroundSet("external vertices need an arrangement over X' = X u B0")
        fam = matroid.external_bases(frame.X, frame)
    elif which == "internal":
        fam = matroid.internal_bases(A.ground)
    else:
        raise ValueError(f"unknown vertex family {which!r}")
    return [A.vertex_of[B] for B in fam]


# -- least space -------------------------------------------------------


def least_space(points, degcap: int | None = None) -> GradedPolySpace:
    """``Pi(sigma)``: span of least terms of the exponentials at ``points``.

    Gaussian elimination on the Taylor coefficients ``alpha^b / b!`` taken one
    degree block at a time; rows that still vanish on all earlier blocks are
    reduced within the block, pivoting on the leftmost nonzero column.
    """
    pts = [tuple(Fraction(v) for v in p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    if not pts:
        return GradedPolySpace(0)
    n = len(pts[0])
    m = len(pts)
    if degcap is None:
        degcap = m
    # each live row is a combination (over the points) still vanishing on lower blocks
    live = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    out = {}
    for d in range(degcap + 1):
        if not live:
            break
        monos = monomials(n, d)
        block = [
            [_prod_pow(p, e) / exp_factorial(e) for e in monos]
            for p in pts
        ]
        rows = [[sum((c * block[k][j] for k, c in enumerate(comb) if c), Fraction(0)) for j in range(len(monos))] for comb in live]
        pivot_rows = []
        rest = list(zip(rows, live))
        for col in range(len(monos)):
            idx = next((i for i, (r, _) in enumerate(rest) if r[col] != 0), None)
            if idx is None:
                continue
            prow, pcomb = rest.pop(idx)
            new_rest = []
            for r, c in rest:
                f = r[col] / prow[col]
                if f:
                    r = [a - f * b for a, b in zip(r, prow)]
                    c = [a - f * b for a, b in zip(c, pcomb)]
                new_rest.append((r, c))
            rest = new_rest
            pivot_rows.append(prow)
        if pivot_rows:
            out[d] = pivot_rows
        live = [c for _, c in rest]
    if live:
        raise TruncationTooLow(f"{len(live)} exponential(s) still vanish through degree {degcap}")
    return GradedPolySpace.from_vectors(n, out)


def _prod_pow(p, e) -> Fraction:
    out = Fraction(1)
    for a, k in zip(p, e):
        if k:
            out *= a**k
    return out


def correctness_check(P: GradedPolySpace, points) -> bool:
    """Is interpolation from ``P`` at ``points`` correct (evaluation matrix invertible)?"""
    polys = P.polys()
    if len(polys) != len(points):
        raise exactla.DimensionMismatch(f"dim P = {len(polys)} but {len(points)} points")
    if not polys:
        return True
    M = [[p(a) for a in points] for p in polys]
    return exactla.det(M) != 0
