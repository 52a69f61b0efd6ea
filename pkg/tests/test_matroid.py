import itertools

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import CORPUS, K3, gs
from zonoalg import matroid
from zonoalg.matroid import ExternalFrame, GroundSet


# -- independent oracles (sympy ranks, brute force) -------------------


def srank(X, idx):
    idx = list(idx)
    if not idx:
        return 0
    return sympy.Matrix([list(X.columns[i]) for i in idx]).rank()


def oracle_bases(X):
    return [B for B in itertools.combinations(range(X.N), X.n) if srank(X, B) == X.n]


def oracle_independents(X):
    return [I for k in range(X.n + 1) for I in itertools.combinations(range(X.N), k) if srank(X, I) == k]


def tutte_at(X, x, y):
    """Corank-nullity expansion of the Tutte polynomial."""
    r = X.n
    total = 0
    for k in range(X.N + 1):
        for A in itertools.combinations(range(X.N), k):
            rA = srank(X, A)
            total += (x - 1) ** (r - rA) * (y - 1) ** (k - rA)
    return total


def oracle_internally_active(X, B, b):
    rest = [c for c in B if c != b]
    outside = [i for i in range(X.N) if srank(X, rest + [i]) > len(rest)]
    return max(outside) == b


def configs(max_n=3, max_N=6):
    def build(n):
        col = st.lists(st.integers(-2, 2), min_size=n, max_size=n).filter(any)
        return st.lists(col, min_size=n, max_size=max_N)

    return st.integers(1, max_n).flatmap(build)


def as_groundset(cols):
    try:
        return GroundSet(tuple(tuple(c) for c in cols))
    except matroid.RankDeficient:
        return None


# -- paper examples ---------------------------------------------------


def test_k4_counts(k4):
    assert len(matroid.bases(k4)) == 16
    assert matroid.is_unimodular(k4)
    # hyperplanes of M(K4): four triangles and three pairs of disjoint edges
    assert len(matroid.facet_hyperplanes(k4)) == 7


def test_k3_external_count(k3):
    assert len(matroid.external_bases(k3)) == 7
    assert len(matroid.independents(k3)) == 7


def test_k3_facets(k3):
    hs = matroid.facet_hyperplanes(k3)
    assert sorted(H.normal for H in hs) == [(0, 1), (1, 0), (1, 1)]
    assert all(H.m == 2 for H in hs)


def test_ex33_xsets(ex33):
    assert matroid.xset(ex33, (0, 2)) == ()
    assert matroid.xset(ex33, (1, 3)) == (0, 2)


def test_ex33_internal_count(ex33):
    E = matroid.ehrhart(ex33)
    assert E.coefficients == (1, 4, 5)
    assert E(-1) == 2 == len(matroid.internal_bases(ex33))


def test_ex52_internal_bases(ex52):
    assert matroid.internal_bases(ex52) == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    for b in (0, 1, 2):
        assert not matroid.internally_active(ex52, (0, 1, 2), b)


def test_ex52_not_barely_long(ex52):
    assert not matroid.is_barely_long(ex52, (4,))


def test_not_in_basis_error(ex52):
    with pytest.raises(matroid.IndexNotInBasis):
        matroid.internally_active(ex52, (0, 1, 2), 4)


def test_input_errors():
    with pytest.raises(matroid.ZeroColumn):
        GroundSet.from_rows([[1, 0], [0, 0]])
    with pytest.raises(matroid.RankDeficient):
        GroundSet.from_rows([[1, 2], [2, 4]])
    with pytest.raises(matroid.DependentInput):
        matroid.xset(gs(K3), (0, 1, 2))


def test_not_unimodular():
    assert not matroid.is_unimodular(gs([[1, 0, 1], [0, 1, 2]]))


def test_minimal_hitting_sets_empty_family():
    assert matroid.minimal_hitting_sets(3, []) == [0]


# -- corpus against oracles -------------------------------------------


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_counts_against_oracles(name):
    X = gs(CORPUS[name])
    assert matroid.bases(X) == oracle_bases(X)
    assert sorted(matroid.independents(X)) == sorted(oracle_independents(X))
    assert len(matroid.bases(X)) == tutte_at(X, 1, 1)
    assert len(matroid.independents(X)) == tutte_at(X, 2, 1)
    assert len(matroid.internal_bases(X)) == tutte_at(X, 0, 1)


@pytest.mark.parametrize("name", ["K3", "K4", "ex33", "ex52", "col12b", "skew3"])
def test_internal_activity_oracle(name):
    X = gs(CORPUS[name])
    for B in matroid.bases(X):
        for b in B:
            assert matroid.internally_active(X, B, b) == oracle_internally_active(X, B, b)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_external_bases(name):
    X = gs(CORPUS[name])
    frame = ExternalFrame.standard(X)
    Bp = matroid.external_bases(X, frame)
    assert len(Bp) == len(set(Bp)) == len(matroid.independents(X))
    Xp = frame.combined
    for I, B in zip(matroid.independents(X), Bp):
        assert set(I) <= set(B)
        assert srank(Xp, B) == X.n and len(B) == X.n
        # greedy: the added elements are B0 elements, never columns of X
        assert all(b >= X.N for b in set(B) - set(I))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_facet_multiplicities(name):
    X = gs(CORPUS[name])
    for H in matroid.facet_hyperplanes(X):
        assert srank(X, H.on) == X.n - 1
        assert H.m == X.N - len(H.on)
        assert sympy.gcd_list(list(H.normal)) == 1


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_subset_families(name):
    X = gs(CORPUS[name])
    if X.N > 6:
        return
    Bs = [set(B) for B in matroid.bases(X)]
    for k in range(X.N + 1):
        for Y in itertools.combinations(range(X.N), k):
            rest = [i for i in range(X.N) if i not in Y]
            assert matroid.is_long(X, Y) == all(set(Y) & B for B in Bs)
            assert matroid.is_short(X, Y) == (srank(X, rest) == X.n)
            # long iff the complement is not spanning
            assert matroid.is_long(X, Y) == (srank(X, rest) < X.n)


# -- properties -------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(configs(), st.randoms(use_true_random=False))
def test_order_invariance(cols, rnd):
    X = as_groundset(cols)
    assume(X is not None)
    order = list(range(X.N))
    rnd.shuffle(order)
    Y = X.permuted(order)
    assert len(matroid.bases(Y)) == len(matroid.bases(X))
    assert len(matroid.internal_bases(Y)) == len(matroid.internal_bases(X))
    assert matroid.ehrhart(Y) == matroid.ehrhart(X)


@settings(max_examples=40, deadline=None)
@given(configs())
def test_ehrhart_identities(cols):
    X = as_groundset(cols)
    assume(X is not None)
    E = matroid.ehrhart(X)
    assert E(1) == len(matroid.independents(X)) == len(matroid.external_bases(X))
    assert (-1) ** X.n * E(-1) == len(matroid.internal_bases(X))


@settings(max_examples=30, deadline=None)
@given(configs())
def test_valuation_sums(cols):
    X = as_groundset(cols)
    assume(X is not None)
    # X(B) is short, so N - val(B) >= n, and bases with val = 0 exist exactly once
    vals = [matroid.val(X, B) for B in matroid.bases(X)]
    assert min(vals) == 0 and vals.count(0) == 1
    assert all(matroid.is_short(X, matroid.xset(X, B)) for B in matroid.bases(X))


def test_general_position_frame(k4):
    f = ExternalFrame.general_position(k4)
    assert f.is_general_position()
    assert len(matroid.external_bases(k4, f)) == 38


def test_ground_set_cap():
    X = GroundSet(tuple((1,) for _ in range(23)))
    with pytest.raises(matroid.GroundSetTooLarge):
        X.check_size()
