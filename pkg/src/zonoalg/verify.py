"""Theorem checks over a concrete configuration.

Each function returns a JSON-ready dict with a ``status`` field (``pass``,
``fail`` or ``not-applicable``) and the raw quantities that were compared.
"""

from __future__ import annotations

from . import geometry, matroid, spaces
from .matroid import ExternalFrame, GroundSet
from .poly import product_of_vectors, product_pY
from .spaces import GradedPolySpace


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _all_pass(checks: dict) -> bool:
    return all(v is True for v in checks.values())


def central_p_by_definition(X: GroundSet) -> GradedPolySpace:
    """``span{p_Y : Y short}``, by brute force over all subsets."""
    return GradedPolySpace.span(X.n, (product_pY(X.columns, Y) for Y in matroid.short_sets(X)))


def internal_p_by_intersection(X: GroundSet, over=None) -> GradedPolySpace:
    """``P-(X)`` as the intersection of ``P(X \\ x)`` over ``x`` in ``over`` (default X)."""
    over = range(X.N) if over is None else over
    inter = None
    for x in over:
        rest = [c for i, c in enumerate(X.columns) if i != x]
        try:
            Xx = GroundSet(tuple(rest))
        except (matroid.RankDeficient, ValueError):
            return GradedPolySpace(X.n)  # no short subsets once rank drops
        P = spaces.pspace(Xx, "central")
        inter = P if inter is None else inter.intersection(P)
    return inter if inter is not None else GradedPolySpace(X.n)


def main_theorem(X: GroundSet, kind: str = "central", frame: ExternalFrame | None = None, seed: int = 0) -> dict:
    """The six-part main theorem for one of the three pairs."""
    frame = frame or ExternalFrame.standard(X)
    eps = {"central": 0, "external": 1, "internal": -1}[kind]

    if kind == "central":
        family = matroid.bases(X)
        ground = X
    elif kind == "external":
        family = matroid.external_bases(X, frame)
        ground = frame.combined
    else:
        family = matroid.internal_bases(X)
        ground = X
    count = len(family)

    if kind == "internal":
        P = internal_p_by_intersection(X)
    else:
        P = spaces.pspace(X, kind)
    J = spaces.jgens(X, kind, frame)
    D = spaces.kernel(J)
    kerI = spaces.kernel(spaces.igens(X, eps))
    A = geometry.generic_lambda(ground, seed)
    if kind == "external":
        V = geometry.vertex_subsets(A, "external", frame)
    elif kind == "internal":
        V = geometry.vertex_subsets(A, "internal")
    else:
        V = geometry.vertex_subsets(A, "all")
    PiV = geometry.least_space(V)

    checks = {}
    checks["1_dimensions"] = P.dim == D.dim == count
    if P.dim == D.dim:
        _, nonsing = spaces.duality_gram(P, D)
    else:
        nonsing = False
    checks["2_duality"] = nonsing and P.hilbert() == D.hilbert()
    checks["3_D_equals_PiV"] = D == PiV
    checks["4_V_correct"] = (
        len(V) == P.dim == D.dim
        and geometry.correctness_check(D, V)
        and geometry.correctness_check(P, V)
    )
    checks["5_P_equals_kerI"] = P == kerI
    checks["6_direct_sum"] = spaces.direct_sum_check(P, J)
    return {
        "theorem": {"central": "3.8", "external": "4.8", "internal": "5.9"}[kind],
        "status": _status(_all_pass(checks)),
        "count": count,
        "dimP": P.dim,
        "dimD": D.dim,
        "dimKerI": kerI.dim,
        "hilbertP": P.hilbert(),
        "hilbertD": D.hilbert(),
        "hilbertValuation": spaces.hilbert(X, kind),
        "vertices": len(V),
        "lambdaSeed": A.seed,
        "checks": checks,
    }


def prop_1_1(X: GroundSet) -> dict:
    uni = matroid.is_unimodular(X)
    out = {
        "unimodular": uni,
        "dimKerIplus": spaces.kernel(spaces.igens(X, 1)).dim,
        "dimKerI": spaces.kernel(spaces.igens(X, 0)).dim,
        "dimKerIminus": spaces.kernel(spaces.igens(X, -1)).dim,
        "latticeClosed": len(geometry.lattice_points(X, True)),
        "latticeInterior": len(geometry.lattice_points(X, False)),
        "volume": geometry.volume(X),
    }
    if not uni:
        out["status"] = "not-applicable"
        return out
    ok = (
        out["dimKerIplus"] == out["latticeClosed"]
        and out["dimKerI"] == out["volume"]
        and out["dimKerIminus"] == out["latticeInterior"]
    )
    out["status"] = _status(ok)
    return out


def interpolation_theorem(X: GroundSet, kind: str = "central", seed: int = 0) -> dict:
    """Least space of the zonotope point set equals the P-space; the points are correct."""
    name = {"central": "3.9", "external": "4.9", "internal": "5.10"}[kind]
    if not matroid.is_unimodular(X):
        return {"theorem": name, "status": "not-applicable", "unimodular": False}
    if kind == "central":
        t = geometry.generic_t(X, seed)
        pts = geometry.zxt(X, t)
    else:
        t = None
        pts = geometry.lattice_points(X, closed=(kind == "external"))
    P = spaces.pspace(X, kind)
    L = geometry.least_space(pts)
    equal = L == P
    correct = len(pts) == P.dim and geometry.correctness_check(P, pts)
    out = {
        "theorem": name,
        "status": _status(equal and correct),
        "points": len(pts),
        "dimP": P.dim,
        "hilbertLeast": L.hilbert(),
        "hilbertP": P.hilbert(),
        "leastEqualsP": equal,
        "correct": correct,
    }
    if t is not None:
        out["t"] = list(t)
    return out


def thm_4_10(X: GroundSet) -> dict:
    Q = spaces.q_basis(X, "external")
    span = GradedPolySpace.span(X.n, [q for _, q in Q])
    I = spaces.igens(X, 1)
    kerI = spaces.kernel(I)
    in_kernel = span.issubspace(kerI)
    independent = span.dim == len(Q)
    ok = independent and in_kernel and span.dim == len(matroid.independents(X))
    return {
        "status": _status(ok),
        "basisSize": len(Q),
        "rank": span.dim,
        "independents": len(matroid.independents(X)),
        "inKerIplus": in_kernel,
        "hilbert": span.hilbert(),
    }


def thm_4_11(X: GroundSet) -> dict:
    ok = spaces.intersection_char_plus(X)
    return {"status": _status(ok), "bases": len(matroid.bases(X)), "intersectionEqualsPplus": ok}


def ehrhart_check(X: GroundSet, orders=None) -> dict:
    E = matroid.ehrhart(X)
    n = X.n
    orders = orders or [list(range(X.N)), list(reversed(range(X.N)))]
    per_order = []
    for order in orders:
        Y = X.permuted(order)
        per_order.append({"order": list(order), "internalBases": len(matroid.internal_bases(Y))})
    ok = (
        E(1) == len(matroid.independents(X)) == len(matroid.external_bases(X))
        and all((-1) ** n * E(-1) == r["internalBases"] for r in per_order)
    )
    return {
        "status": _status(ok),
        "coefficients": list(E.coefficients),
        "E(1)": E(1),
        "E(-1)": E(-1),
        "independents": len(matroid.independents(X)),
        "externalBases": len(matroid.external_bases(X)),
        "orders": per_order,
    }


def tilde_q_check(X: GroundSet) -> dict:
    """~Q_B: independent, in ker I-, Q_B - ~Q_B in J-, at most n-2 new factors."""
    tq = spaces.tilde_q_basis(X)
    kerI = spaces.kernel(spaces.igens(X, -1))
    J = spaces.jgens(X, "internal")
    span = GradedPolySpace.span(X.n, [t.poly for t in tq])
    in_ker = all(kerI.contains(t.poly) for t in tq)
    diff_in_J = all(spaces.ideal_membership(J, t.Q - t.poly) for t in tq)
    shape = True
    worst = 0
    for t in tq:
        c, Y, Zp = t.factored(X)
        worst = max(worst, len(Zp))
        rebuilt = product_pY(X.columns, Y) * product_of_vectors(Zp, X.n) * c
        shape = shape and rebuilt == t.poly and len(Zp) <= max(X.n - 2, 0)
    ok = span.dim == len(tq) and in_ker and diff_in_J and shape
    return {
        "status": _status(ok),
        "count": len(tq),
        "rank": span.dim,
        "inKerIminus": in_ker,
        "differenceInJminus": diff_in_J,
        "freeFactorsAtMostNMinus2": shape,
        "maxReplaced": max((len(t.W_prime) for t in tq), default=0),
        "maxFreeFactors": worst,
    }


def conj_6_1(X: GroundSet) -> dict:
    return spaces.conjecture61_report(X)
