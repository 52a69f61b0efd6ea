"""Zonotopal ideals, their kernels and the P/D polynomial spaces.

Everything is computed degree by degree on homogeneous slices.  A slice of
degree ``d`` is a subspace of the coefficient space on ``monomials(n, d)``;
the pairing ``<t^a, t^b> = a! [a = b]`` identifies the kernel slice of an
ideal with the orthogonal complement of the ideal slice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from . import exactla, matroid
from .exactla import Echelon
from .matroid import ExternalFrame, GroundSet, indices_of, mask_of
from .poly import MPoly, diff_apply, monomials, pairing, product_of_vectors, product_pY

Kind = Literal["central", "external", "internal"]
KINDS = ("central", "external", "internal")

# hard stop for "until the kernel vanishes" loops
_DEGREE_LIMIT = 64


class NotInternalBasis(ValueError):
    pass


# -- graded spaces -------------------------------------------------------


class GradedPolySpace:
    """A finite-dimensional space spanned by homogeneous polynomials.

    ``basis[d]`` is a linearly independent list of degree-``d`` polynomials.
    """

    def __init__(self, n: int, basis: dict | None = None):
        self.n = n
        self.basis = {d: list(ps) for d, ps in (basis or {}).items() if ps}
        self._ech = {}

    @classmethod
    def span(cls, n: int, polys: Iterable[MPoly]) -> "GradedPolySpace":
        """Span of homogeneous polynomials, keeping the first independent ones."""
        space = cls(n)
        for p in polys:
            if not p:
                continue
            if not p.is_homogeneous():
                raise ValueError(f"{p} is not homogeneous")
            d = p.degree
            if space._echelon(d).add(p.vector(d)):
                space.basis.setdefault(d, []).append(p)
        return space

    @classmethod
    def from_vectors(cls, n: int, vecs: dict) -> "GradedPolySpace":
        return cls(n, {d: [MPoly.from_vector(n, d, v) for v in vs] for d, vs in vecs.items()})

    def _echelon(self, d: int) -> Echelon:
        e = self._ech.get(d)
        if e is None:
            e = Echelon(len(monomials(self.n, d)))
            for p in self.basis.get(d, ()):
                e.add(p.vector(d))
            self._ech[d] = e
        return e

    @property
    def top_degree(self) -> int:
        return max(self.basis, default=-1)

    def degrees(self) -> list:
        return sorted(self.basis)

    def hilbert(self, length: int | None = None) -> list:
        top = self.top_degree + 1 if length is None else length
        return [len(self.basis.get(d, ())) for d in range(top)]

    @property
    def dim(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def polys(self) -> list:
        return [p for d in self.degrees() for p in self.basis[d]]

    def slice_vectors(self, d: int) -> list:
        return [p.vector(d) for p in self.basis.get(d, ())]

    def contains(self, p: MPoly) -> bool:
        for d in {sum(e) for e in p.terms}:
            if not self._echelon(d).contains(p.vector(d)):
                return False
        return True

    def issubspace(self, other: "GradedPolySpace") -> bool:
        return all(other.contains(p) for p in self.polys())

    def __eq__(self, other):
        if not isinstance(other, GradedPolySpace):
            return NotImplemented
        return self.hilbert() == other.hilbert() and self.issubspace(other)

    def __repr__(self):
        return f"GradedPolySpace(n={self.n}, hilbert={self.hilbert()})"

    def intersection(self, other: "GradedPolySpace") -> "GradedPolySpace":
        out = {}
        for d in set(self.basis) & set(other.basis):
            A = self.slice_vectors(d)
            B = other.slice_vectors(d)
            # a.x - b.y = 0 on the stacked coefficients
            cols = [list(v) for v in A] + [[-x for x in v] for v in B]
            rows = exactla.transpose(cols)
            vecs = []
            for c in exactla.nullspace(rows, len(cols)):
                v = [sum((ci * ai[k] for ci, ai in zip(c[: len(A)], A)), Fraction(0)) for k in range(len(A[0]))]
                vecs.append(v)
            if vecs:
                R, _ = exactla.rref(vecs)
                out[d] = R
        return GradedPolySpace.from_vectors(self.n, out)

    def is_derivative_closed(self) -> bool:
        for p in self.polys():
            for i in range(self.n):
                if not self.contains(p.derivative(i)):
                    return False
        return True


# -- ideal generators ----------------------------------------------------


@dataclass
class IdealGens:
    """Homogeneous generators of one of the six zonotopal ideals."""

    n: int
    gens: list
    kind: str = ""
    sets: list = field(default_factory=list)  # index sets behind p_Y generators, if any
    _slices: dict = field(default_factory=dict, repr=False)

    def slice_echelon(self, d: int) -> Echelon:
        """Echelon basis of the degree-``d`` slice of the ideal."""
        e = self._slices.get(d)
        if e is not None:
            return e
        e = Echelon(len(monomials(self.n, d)))
        for g in self.gens:
            k = d - g.degree
            if k < 0:
                continue
            for m in monomials(self.n, k):
                if e.full:
                    break
                e.add((g * MPoly(self.n, {m: 1})).vector(d))
            if e.full:
                break
        self._slices[d] = e
        return e

    def slice_dim(self, d: int) -> int:
        return len(self.slice_echelon(d))

    def kernel_slice(self, d: int) -> list:
        """Coefficient vectors of ``{p in Pi_d : g(D) p = 0 for every generator g}``."""
        n = self.n
        cols = monomials(n, d)
        rows = []
        for g in self.gens:
            k = d - g.degree
            if k < 0:
                continue
            images = [diff_apply(g, MPoly(n, {e: 1})).vector(k) for e in cols]
            rows.extend(exactla.transpose(images))
        if not rows:
            return [[Fraction(int(i == j)) for j in range(len(cols))] for i in range(len(cols))]
        return exactla.nullspace(rows, len(cols))


def igens(X: GroundSet, eps: int) -> IdealGens:
    """Generators ``p_eta^(m(H)+eps)``, one per facet hyperplane."""
    if eps not in (-1, 0, 1):
        raise ValueError("eps must be -1, 0 or +1")
    gens = [MPoly.linear(H.normal) ** (H.m + eps) for H in matroid.facet_hyperplanes(X)]
    kind = {1: "I+", 0: "I", -1: "I-"}[eps]
    return IdealGens(X.n, gens, kind)


def _gens_from_sets(columns, n: int, sets, kind: str) -> IdealGens:
    gens = [product_pY(columns, Y, n=n) for Y in sets]
    return IdealGens(n, gens, kind, [tuple(Y) for Y in sets])


def jgens(X: GroundSet, kind: Kind = "central", frame: ExternalFrame | None = None) -> IdealGens:
    """``p_Y`` over inclusion-minimal long / external-long / barely long sets."""
    if kind == "central":
        return _gens_from_sets(X.columns, X.n, matroid.minimal_long_sets(X), "J")
    if kind == "external":
        frame = frame or ExternalFrame.standard(X)
        Xp = frame.combined
        return _gens_from_sets(Xp.columns, X.n, matroid.minimal_external_long_sets(frame), "J+")
    if kind == "internal":
        return _gens_from_sets(X.columns, X.n, matroid.minimal_barely_long_sets(X), "J-")
    raise ValueError(f"unknown kind {kind!r}")


def kernel(gens: IdealGens, degcap: int | None = None) -> GradedPolySpace:
    """Polynomial kernel of the ideal, slice by slice.

    Stops at the first vanishing slice (all higher slices vanish too, since
    the kernel is closed under differentiation) or after ``degcap``.
    """
    limit = _DEGREE_LIMIT if degcap is None else degcap
    out = {}
    for d in range(limit + 1):
        vecs = gens.kernel_slice(d)
        if not vecs:
            break
        out[d] = vecs
    return GradedPolySpace.from_vectors(gens.n, out)


def ideal_membership(gens: IdealGens, f: MPoly) -> bool:
    if not f:
        return True
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    d = f.degree
    return gens.slice_echelon(d).contains(f.vector(d))


# -- Hilbert series by valuation counting --------------------------------


def _count_by(values) -> list:
    values = list(values)
    if not values:
        return []
    h = [0] * (max(values) + 1)
    for v in values:
        h[v] += 1
    return h


def hilbert(X: GroundSet, kind: Kind = "central") -> list:
    """Hilbert series from valuations ``val = #X(B)``; no linear algebra."""
    if kind == "central":
        fam = matroid.bases(X)
    elif kind == "external":
        fam = matroid.independents(X)
    elif kind == "internal":
        fam = matroid.internal_bases(X)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return _count_by(matroid.val(X, B) for B in fam)


# -- P-spaces -------------------------------------------------------------


def q_basis(X: GroundSet, kind: Kind = "central") -> list:
    """The polynomials ``Q_B = p_X(B)`` paired with their index sets."""
    if kind == "central":
        fam = matroid.bases(X)
    elif kind == "external":
        fam = matroid.independents(X)
    elif kind == "internal":
        fam = matroid.internal_bases(X)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return [(B, product_pY(X.columns, matroid.xset(X, B))) for B in fam]


def pspace(X: GroundSet, kind: Kind = "central") -> GradedPolySpace:
    """P(X), P+(X) from their homogeneous bases; P-(X) as the kernel of I-(X)."""
    if kind == "internal":
        return kernel(igens(X, -1), X.N + 1)
    return GradedPolySpace.span(X.n, [q for _, q in q_basis(X, kind)])


def pspace_plus_span(X: GroundSet) -> GradedPolySpace:
    """``span{p_Y : Y subset of X}`` by brute force over all subsets."""
    X.check_size()
    return GradedPolySpace.span(
        X.n, (product_pY(X.columns, indices_of(m)) for m in range(1 << X.N))
    )


def pin_pex(X: GroundSet) -> tuple:
    internal = set(matroid.internal_bases(X))
    pin, pex = [], []
    for B, q in q_basis(X, "central"):
        (pin if B in internal else pex).append(q)
    return GradedPolySpace.span(X.n, pin), GradedPolySpace.span(X.n, pex)


def dspace(ground: GroundSet, family, degcap: int | None = None) -> GradedPolySpace:
    """``{f : p_Y(D) f = 0 for every Y in the ground set meeting all B in family}``."""
    ground.check_size()
    fam = [mask_of(B) for B in family]
    sets = [indices_of(m) for m in matroid.minimal_hitting_sets(ground.N, fam)]
    gens = _gens_from_sets(ground.columns, ground.n, sets, "J")
    return kernel(gens, degcap)


def dspace_kind(X: GroundSet, kind: Kind = "central", frame: ExternalFrame | None = None):
    if kind == "central":
        return dspace(X, matroid.bases(X))
    if kind == "internal":
        return dspace(X, matroid.internal_bases(X))
    if kind == "external":
        frame = frame or ExternalFrame.standard(X)
        return dspace(frame.combined, matroid.external_bases(X, frame))
    raise ValueError(f"unknown kind {kind!r}")


# -- checks ---------------------------------------------------------------


def direct_sum_check(P: GradedPolySpace, J: IdealGens, upto: int | None = None) -> bool:
    """``P_j (+) J_j = Pi_j`` for every degree up to one past the top of P.

    Beyond that degree the ideal slice is everything (an ideal containing all
    of ``Pi_j`` contains ``Pi_{j+1}``), so the check covers every degree.
    """
    top = P.top_degree + 1 if upto is None else upto
    for d in range(top + 1):
        full = len(monomials(P.n, d))
        pd = P.slice_vectors(d)
        je = J.slice_echelon(d)
        if len(pd) + len(je) != full:
            return False
        if exactla.rank(pd + je.rows) != full:
            return False
    return True


def duality_gram(P: GradedPolySpace, D: GradedPolySpace):
    """Gram matrix ``<p_i, d_j>`` and whether it is nonsingular."""
    ps, ds = P.polys(), D.polys()
    if len(ps) != len(ds):
        raise exactla.DimensionMismatch(f"dim P = {len(ps)} but dim D = {len(ds)}")
    G = [[pairing(p, d) for d in ds] for p in ps]
    return G, (exactla.det(G) != 0 if G else True)


def duality_nonsingular_by_degree(P: GradedPolySpace, D: GradedPolySpace) -> bool:
    """Same test as :func:`duality_gram`, but block by block (the pairing is graded)."""
    if P.hilbert() != D.hilbert():
        return False
    for d in P.degrees():
        G = [[pairing(p, q) for q in D.basis[d]] for p in P.basis[d]]
        if exactla.det(G) == 0:
            return False
    return True


def plus_membership_corollary(X: GroundSet, Y, eta) -> bool:
    """Does ``p_eta^(#(X \\ span Y) + 1)`` lie in I+(X)?  (eta must be orthogonal to Y.)"""
    ym = mask_of(Y)
    outside = sum(1 for i in range(X.N) if not X.in_span(i, ym))
    f = MPoly.linear(eta) ** (outside + 1)
    return ideal_membership(igens(X, 1), f)


def intersection_char_plus(X: GroundSet) -> bool:
    """Compare P+(X) with the intersection of P(X u B) over the bases B of X."""
    inter = None
    for B in matroid.bases(X):
        XB = X.extended([X.columns[i] for i in B])
        P = kernel(igens(XB, 0), XB.N + 1)
        inter = P if inter is None else inter.intersection(P)
    return inter == pspace(X, "external")


# -- the internal basis construction ------------------------------------


@dataclass(frozen=True)
class TildeQ:
    basis: tuple
    Q: MPoly  # p_X(B)
    poly: MPoly  # the replacement ~Q_B
    Z: tuple  # indices of X(B) kept as they are
    W: tuple  # indices of X(B) that were replaced
    W_prime: tuple  # the replacement vectors, in the order of W

    def factored(self, X: GroundSet) -> tuple:
        """``~Q_B = c * p_Y * p_Z'`` with ``Y`` in X and ``Z'`` the replacement
        vectors that are not multiples of a column of B; returns ``(c, Y, Z')``.

        A replacement vector lying on a line ``span b`` (b in B) is absorbed
        into Y; b is never in X(B), so Y stays a subset of X.
        """
        c = Fraction(1)
        Y = list(self.Z)
        rest = []
        for w in self.W_prime:
            hit = None
            for b in self.basis:
                x = X.columns[b]
                if b not in Y and exactla.rank([x, w]) == 1:
                    k = next(i for i, v in enumerate(x) if v)
                    hit = (b, Fraction(w[k]) / x[k])
                    break
            if hit is None:
                rest.append(w)
            else:
                Y.append(hit[0])
                c *= hit[1]
        return c, tuple(sorted(Y)), tuple(rest)


def tilde_q(X: GroundSet, B) -> TildeQ:
    """Rewrite ``Q_B`` (B internal) as ``~Q_B`` in ker I-(X) with ``Q_B - ~Q_B`` in J-(X)."""
    B = tuple(sorted(B))
    if B not in set(matroid.internal_bases(X)):
        raise NotInternalBasis(f"{B} is not an internal basis")
    n = X.n
    XB = matroid.xset(X, B)
    Q = product_pY(X.columns, XB)
    xb_mask = mask_of(XB)
    Y_mask = X.full_mask & ~xb_mask

    hit = []  # (H, x_H, w_H)
    for H in matroid.facet_hyperplanes(X):
        op = MPoly.linear(H.normal) ** (H.m - 1)
        if not diff_apply(op, Q):
            continue
        outside_Y = indices_of(Y_mask & ~H.on_mask)
        if len(outside_Y) != 1 or outside_Y[0] not in B:
            raise AssertionError(f"Y \\ H is not a single basis element for normal {H.normal}")
        w = max(i for i in range(X.N) if not H.on_mask >> i & 1)
        hit.append((H, outside_Y[0], w))

    if not hit:
        return TildeQ(B, Q, Q, XB, (), ())

    W = sorted({w for _, _, w in hit})
    normals = []
    W_prime = []
    for w in W:
        group = [(H, x) for H, x, ww in hit if ww == w]
        normals.extend(H.normal for H, _ in group)
        Xi = sorted({x for _, x in group})
        S = exactla.nullspace(normals, n)
        cols = [list(s) for s in S] + [list(X.columns[x]) for x in Xi]
        coeffs = exactla.solve(exactla.transpose(cols, len(cols)), list(X.columns[w]))
        if coeffs is None:
            raise AssertionError(f"w = {w} is not in S_i + span X_i")
        a = coeffs[len(S):]
        wp = [Fraction(X.columns[w][k]) - sum((ax * X.columns[x][k] for ax, x in zip(a, Xi)), Fraction(0)) for k in range(n)]
        W_prime.append(tuple(wp))

    Z = tuple(i for i in XB if i not in W)
    poly = product_pY(X.columns, Z) * product_of_vectors(W_prime, n)
    return TildeQ(B, Q, poly, Z, tuple(W), tuple(W_prime))


def tilde_q_basis(X: GroundSet) -> list:
    return [tilde_q(X, B) for B in matroid.internal_bases(X)]


# -- very short sets ---------------------------------------------------


def very_short_span(X: GroundSet) -> GradedPolySpace:
    return GradedPolySpace.span(X.n, (product_pY(X.columns, Y) for Y in matroid.very_short_sets(X)))


def conjecture61_report(X: GroundSet) -> dict:
    """Compare span{p_Y : Y very short} with P-(X); reports, never asserts."""
    V = very_short_span(X)
    P = pspace(X, "internal")
    contained = V.issubspace(P)
    equal = contained and V.dim == P.dim
    return {
        "veryShortHilbert": V.hilbert(),
        "internalHilbert": P.hilbert(),
        "contained": contained,
        "status": "equal" if equal else ("strict-subspace" if contained else "not-contained"),
    }
