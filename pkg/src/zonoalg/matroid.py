"""Linear matroid data of an ordered integer vector configuration.

Subsets of the ground set are handled internally as bitmasks (bit ``i`` is
column ``i``); the public functions return sorted index tuples.  The column
order of :class:`GroundSet` is the order used by every order-dependent
notion (internal activity, ``X(B)``, greedy extension).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterator, Sequence

from . import exactla

MAX_GROUND = 22


class GroundSetTooLarge(ValueError):
    pass


class RankDeficient(ValueError):
    pass


class ZeroColumn(ValueError):
    pass


class DependentInput(ValueError):
    pass


class IndexNotInBasis(ValueError):
    pass


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def primitive(v) -> tuple:
    """Scale a rational vector to a primitive integer vector, first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class GroundSet:
    """Ordered multiset of nonzero integer vectors spanning R^n."""

    columns: tuple
    n: int = field(default=0)

    def __post_init__(self):
        cols = tuple(tuple(int(v) for v in c) for c in self.columns)
        if not cols:
            raise RankDeficient("empty configuration")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ValueError("columns have different lengths")
        for i, c in enumerate(cols):
            if not any(c):
                raise ZeroColumn(f"column {i} is zero")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "n", n)
        if exactla.rank(cols) != n:
            raise RankDeficient(f"columns do not span R^{n}")

    @classmethod
    def from_rows(cls, rows) -> "GroundSet":
        """Build from a matrix given row by row (columns are the vectors)."""
        rows = [list(r) for r in rows]
        return cls(tuple(zip(*rows)))

    @property
    def N(self) -> int:
        return len(self.columns)

    def __len__(self):
        return len(self.columns)

    def rows(self) -> list:
        return [list(r) for r in zip(*self.columns)]

    def permuted(self, order: Sequence[int]) -> "GroundSet":
        """The same multiset listed as ``[X[i] for i in order]``."""
        if sorted(order) != list(range(self.N)):
            raise ValueError(f"{order!r} is not a permutation of 0..{self.N - 1}")
        return GroundSet(tuple(self.columns[i] for i in order))

    def extended(self, extra) -> "GroundSet":
        return GroundSet(self.columns + tuple(tuple(c) for c in extra))

    def check_size(self, cap: int = MAX_GROUND):
        if self.N > cap:
            raise GroundSetTooLarge(f"#X = {self.N} exceeds the enumeration cap {cap}")

    # -- rank oracle ------------------------------------------------------

    @cached_property
    def _rank_cache(self) -> dict:
        return {0: 0}

    def rank_mask(self, mask: int) -> int:
        cache = self._rank_cache
        r = cache.get(mask)
        if r is None:
            r = exactla.rank([self.columns[i] for i in indices_of(mask)])
            cache[mask] = r
        return r

    def rank_of(self, indices) -> int:
        return self.rank_mask(mask_of(indices))

    def in_span(self, i: int, mask: int) -> bool:
        """Is column ``i`` in the span of the columns in ``mask``?"""
        if mask >> i & 1:
            return True
        return self.rank_mask(mask | 1 << i) == self.rank_mask(mask)

    @property
    def full_mask(self) -> int:
        return (1 << self.N) - 1

    # -- cached families -------------------------------------------------

    @cached_property
    def basis_masks(self) -> tuple:
        n = self.n
        out = []
        for combo in itertools.combinations(range(self.N), n):
            if exactla.det([self.columns[i] for i in combo]) != 0:
                out.append(mask_of(combo))
        return tuple(out)

    @cached_property
    def independent_masks(self) -> tuple:
        self.check_size()
        out = [0]
        for k in range(1, self.n + 1):
            for combo in itertools.combinations(range(self.N), k):
                if self.rank_mask(mask_of(combo)) == k:
                    out.append(mask_of(combo))
        return tuple(out)


def bases(X: GroundSet) -> list:
    """All bases as sorted index tuples, lexicographically ordered."""
    return [indices_of(m) for m in X.basis_masks]


def independents(X: GroundSet) -> list:
    """All independent subsets (including the empty set) in graded-lex order."""
    return [indices_of(m) for m in X.independent_masks]


def is_unimodular(X: GroundSet) -> bool:
    return all(abs(exactla.det([X.columns[i] for i in indices_of(m)])) == 1 for m in X.basis_masks)


@dataclass(frozen=True)
class EhrhartPoly:
    """``E_X(t) = sum over independent sets I of t^#I``, stored by coefficient."""

    coefficients: tuple

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))


def ehrhart(X: GroundSet) -> EhrhartPoly:
    counts = [0] * (X.n + 1)
    for m in X.independent_masks:
        counts[bin(m).count("1")] += 1
    return EhrhartPoly(tuple(counts))


# -- external frame ------------------------------------------------------


@dataclass(frozen=True)
class ExternalFrame:
    """An ordered basis ``B0`` appended after ``X`` to give ``X' = X ∪ B0``."""

    X: GroundSet
    B0: tuple

    def __post_init__(self):
        b0 = tuple(tuple(int(v) for v in b) for b in self.B0)
        if len(b0) != self.X.n or exactla.det(b0) == 0:
            raise ValueError("B0 must be a basis of R^n")
        object.__setattr__(self, "B0", b0)

    @classmethod
    def standard(cls, X: GroundSet) -> "ExternalFrame":
        n = X.n
        return cls(X, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def general_position(cls, X: GroundSet, max_tries: int = 200) -> "ExternalFrame":
        """B0 drawn from moment-curve points (1, k, k^2, ...) in general position."""
        n = X.n
        k = 2
        for _ in range(max_tries):
            cand = [tuple(kk**e for e in range(n)) for kk in range(k, k + n)]
            try:
                frame = cls(X, tuple(cand))
            except ValueError:
                k += 1
                continue
            if frame.is_general_position():
                return frame
            k += 1
        raise RuntimeError("no general-position B0 found")

    @cached_property
    def combined(self) -> GroundSet:
        return self.X.extended(self.B0)

    @property
    def b0_indices(self) -> tuple:
        N = self.X.N
        return tuple(range(N, N + self.X.n))

    def is_general_position(self) -> bool:
        """No b in B0 lies in a proper subspace spanned by other elements of X'."""
        Xp = self.combined
        n = Xp.n
        for b in self.b0_indices:
            others = [i for i in range(Xp.N) if i != b]
            for k in range(1, n):
                for combo in itertools.combinations(others, k):
                    m = mask_of(combo)
                    if Xp.rank_mask(m) == k and Xp.in_span(b, m):
                        return False
        return True


def extend(I, frame: ExternalFrame) -> tuple:
    """Greedy completion ex(I) of an independent set to a basis of X'."""
    Xp = frame.combined
    m = mask_of(I)
    if Xp.rank_mask(m) != len(tuple(I)):
        raise DependentInput(f"{tuple(I)} is not independent")
    for b in frame.b0_indices:
        if not Xp.in_span(b, m):
            m |= 1 << b
    return indices_of(m)


def external_bases(X: GroundSet, frame: ExternalFrame | None = None) -> list:
    frame = frame or ExternalFrame.standard(X)
    return [extend(indices_of(m), frame) for m in X.independent_masks]


# -- internal activity ---------------------------------------------------


def _max_outside(X: GroundSet, hyper_mask: int) -> int:
    """Largest index of a column outside span(hyper_mask)."""
    for i in range(X.N - 1, -1, -1):
        if not X.in_span(i, hyper_mask):
            return i
    raise ValueError("every column lies in the span")


def internally_active(X: GroundSet, B, b: int) -> bool:
    B = tuple(B)
    if b not in B:
        raise IndexNotInBasis(f"{b} is not in {B}")
    rest = mask_of(B) & ~(1 << b)
    return _max_outside(X, rest) == b


def val_star(X: GroundSet, B) -> int:
    """Number of elements of B that are not internally active."""
    return sum(not internally_active(X, B, b) for b in B)


def internal_bases(X: GroundSet) -> list:
    return [B for B in bases(X) if val_star(X, B) == X.n]


# -- facet hyperplanes ---------------------------------------------------


@dataclass(frozen=True)
class FacetHyperplane:
    normal: tuple
    on: tuple  # indices of columns lying in H
    m: int  # #(X \ H)

    @property
    def on_mask(self) -> int:
        return mask_of(self.on)


def _normal_of(X: GroundSet, combo) -> tuple:
    rows = [X.columns[i] for i in combo]
    ns = exactla.nullspace(rows, X.n)
    return primitive(ns[0])


def facet_hyperplanes(X: GroundSet) -> list:
    """Hyperplanes spanned by columns of X, one per primitive normal, sorted by normal."""
    return list(_facets(X))


@lru_cache(maxsize=256)
def _facets(X: GroundSet) -> tuple:
    n = X.n
    seen = {}
    for combo in itertools.combinations(range(X.N), n - 1):
        if X.rank_of(combo) != n - 1:
            continue
        eta = _normal_of(X, combo)
        if eta in seen:
            continue
        on = tuple(i for i, x in enumerate(X.columns) if sum(a * b for a, b in zip(eta, x)) == 0)
        seen[eta] = FacetHyperplane(eta, on, X.N - len(on))
    return tuple(seen[k] for k in sorted(seen))


# -- X(B) and valuations -------------------------------------------------


def xset(X: GroundSet, I) -> tuple:
    """``X(I) = {y : y not in span{b in I : b <= y}}`` for independent I."""
    I = tuple(sorted(I))
    if X.rank_of(I) != len(I):
        raise DependentInput(f"{I} is not independent")
    out = []
    for y in range(X.N):
        m = mask_of(b for b in I if b <= y)
        if not X.in_span(y, m):
            out.append(y)
    return tuple(out)


def val(X: GroundSet, I) -> int:
    return len(xset(X, I))


# -- subset families ----------------------------------------------------


def hits_all(mask: int, family) -> bool:
    return all(mask & B for B in family)


def minimal_hitting_sets(ground_size: int, family) -> list:
    """Inclusion-minimal subsets meeting every member of ``family`` (masks).

    An empty family is hit by the empty set.  Enumeration is graded-lex.
    """
    family = tuple(family)
    out = []
    for k in range(ground_size + 1):
        for combo in itertools.combinations(range(ground_size), k):
            m = mask_of(combo)
            if not hits_all(m, family):
                continue
            if all(not hits_all(m & ~(1 << i), family) for i in combo):
                out.append(m)
        if not family:
            break
    return out


def _all_masks(N: int) -> Iterator[int]:
    for k in range(N + 1):
        for combo in itertools.combinations(range(N), k):
            yield mask_of(combo)


def is_long(X: GroundSet, Y) -> bool:
    return hits_all(mask_of(Y), X.basis_masks)


def is_short(X: GroundSet, Y) -> bool:
    return X.rank_mask(X.full_mask & ~mask_of(Y)) == X.n


def is_barely_long(X: GroundSet, Y) -> bool:
    return hits_all(mask_of(Y), internal_basis_masks(X))


def is_very_short(X: GroundSet, Y) -> bool:
    ym = mask_of(Y)
    full = X.full_mask
    if X.rank_mask(full & ~ym) != X.n:
        return False
    return all(
        X.rank_mask(full & ~(ym | 1 << x)) == X.n for x in range(X.N) if not ym >> x & 1
    )


def internal_basis_masks(X: GroundSet) -> tuple:
    return tuple(mask_of(B) for B in internal_bases(X))


def long_sets(X: GroundSet) -> Iterator[tuple]:
    X.check_size()
    for m in _all_masks(X.N):
        if hits_all(m, X.basis_masks):
            yield indices_of(m)


def short_sets(X: GroundSet) -> Iterator[tuple]:
    X.check_size()
    for m in _all_masks(X.N):
        if X.rank_mask(X.full_mask & ~m) == X.n:
            yield indices_of(m)


def very_short_sets(X: GroundSet) -> Iterator[tuple]:
    X.check_size()
    for m in _all_masks(X.N):
        Y = indices_of(m)
        if is_very_short(X, Y):
            yield Y


def barely_long_sets(X: GroundSet) -> Iterator[tuple]:
    X.check_size()
    fam = internal_basis_masks(X)
    for m in _all_masks(X.N):
        if hits_all(m, fam):
            yield indices_of(m)


def minimal_long_sets(X: GroundSet) -> list:
    X.check_size()
    return [indices_of(m) for m in minimal_hitting_sets(X.N, X.basis_masks)]


def minimal_barely_long_sets(X: GroundSet) -> list:
    X.check_size()
    return [indices_of(m) for m in minimal_hitting_sets(X.N, internal_basis_masks(X))]


def minimal_external_long_sets(frame: ExternalFrame) -> list:
    """Minimal Y in X' meeting every external basis."""
    Xp = frame.combined
    Xp.check_size()
    fam = [mask_of(B) for B in external_bases(frame.X, frame)]
    return [indices_of(m) for m in minimal_hitting_sets(Xp.N, fam)]
