import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from scipy.optimize import linprog

from conftest import CORPUS, gs
from zonoalg import exactla, geometry, matroid, spaces
from zonoalg.matroid import ExternalFrame

SMALL = sorted(k for k in CORPUS if gs(CORPUS[k]).N <= 6)


def lp_member(X, p, strict):
    """Is p = X lam with 0 <= lam <= 1 (or 0 < lam < 1)?  Decided by an LP on the margin."""
    A = np.array(X.columns, dtype=float).T
    N = X.N
    # variables lam_1..lam_N, s ; maximise s subject to s <= lam <= 1 - s
    c = np.zeros(N + 1)
    c[-1] = -1
    A_eq = np.hstack([A, np.zeros((X.n, 1))])
    A_ub = np.vstack([
        np.hstack([-np.eye(N), np.ones((N, 1))]),
        np.hstack([np.eye(N), np.ones((N, 1))]),
    ])
    b_ub = np.concatenate([np.zeros(N), np.ones(N)])
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=np.array(p, dtype=float),
                  bounds=[(None, None)] * N + [(None, 0.5)])
    if res.status != 0:
        return False
    s = -res.fun
    return s > 1e-7 if strict else s > -1e-7


def box(X):
    lo = [sum(min(0, c[i]) for c in X.columns) for i in range(X.n)]
    hi = [sum(max(0, c[i]) for c in X.columns) for i in range(X.n)]
    return itertools.product(*(range(a - 1, b + 2) for a, b in zip(lo, hi)))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_lattice_points_against_lp(name):
    X = gs(CORPUS[name])
    closed = set(geometry.lattice_points(X, True))
    interior = set(geometry.lattice_points(X, False))
    for p in box(X):
        assert (p in closed) == lp_member(X, p, strict=False), p
        assert (p in interior) == lp_member(X, p, strict=True), p


def test_k3_counts(k3):
    assert len(geometry.lattice_points(k3)) == 7
    assert len(geometry.lattice_points(k3, closed=False)) == 1
    assert geometry.volume(k3) == 3


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_volume_is_sum_of_dets(name):
    X = gs(CORPUS[name])
    expect = sum(abs(sympy.Matrix([list(X.columns[i]) for i in B]).det()) for B in itertools.combinations(range(X.N), X.n))
    assert geometry.volume(X) == expect


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_generic_translate_counts_volume(name):
    X = gs(CORPUS[name])
    t = geometry.generic_t(X)
    assert len(geometry.zxt(X, t)) == geometry.volume(X)


def test_nongeneric_t_rejected(k3):
    with pytest.raises(geometry.GenericityFailure):
        geometry.zxt(k3, (Fraction(1, 2), Fraction(1, 2)))  # (1,1).t = 1


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_generic_lambda(name):
    X = gs(CORPUS[name])
    A = geometry.generic_lambda(X, seed=3)
    verts = geometry.vertex_subsets(A)
    assert len(verts) == len(set(verts)) == len(matroid.bases(X))
    for B, v in A.vertex_of.items():
        for i in range(X.N):
            on = sum(Fraction(a) * b for a, b in zip(X.columns[i], v)) == A.lam[i]
            assert on == (i in B)


def test_zero_lambda_rejected(k3):
    assert not geometry.certify(k3, (0, 0, 0), geometry._vertices(k3, (0, 0, 0)))


def test_external_vertices_need_combined_ground(k3):
    A = geometry.generic_lambda(k3)
    with pytest.raises(geometry.WrongGroundSet):
        geometry.vertex_subsets(A, "external", ExternalFrame.standard(k3))


def test_least_space_examples():
    L = geometry.least_space([(0, 0), (1, 0), (0, 1)])
    assert L.hilbert() == [1, 2]
    # collinear points force a degree-2 element
    L = geometry.least_space([(0, 0), (1, 1), (2, 2)])
    assert L.hilbert() == [1, 1, 1]
    with pytest.raises(ValueError):
        geometry.least_space([(0, 0), (0, 0)])
    with pytest.raises(geometry.TruncationTooLow):
        geometry.least_space([(0, 0), (1, 1), (2, 2)], degcap=1)


@pytest.mark.parametrize("name", SMALL)
def test_least_space_properties(name):
    X = gs(CORPUS[name])
    pts = geometry.lattice_points(X)
    L = geometry.least_space(pts)
    assert L.dim == len(pts)
    assert L.is_derivative_closed()
    assert geometry.correctness_check(L, pts)


@pytest.mark.parametrize("name", [k for k in SMALL if matroid.is_unimodular(gs(CORPUS[k]))])
def test_interpolation_on_unimodular(name):
    X = gs(CORPUS[name])
    assert geometry.least_space(geometry.lattice_points(X)) == spaces.pspace(X, "external")
    inner = geometry.lattice_points(X, closed=False)
    assert geometry.least_space(inner) == spaces.pspace(X, "internal")
    t = geometry.generic_t(X)
    assert geometry.least_space(geometry.zxt(X, t)) == spaces.pspace(X, "central")


def test_correctness_dimension_mismatch(k3):
    with pytest.raises(exactla.DimensionMismatch):
        geometry.correctness_check(spaces.pspace(k3), [(0, 0)])
