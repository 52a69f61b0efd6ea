"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always normalized, value equality).
Matrices are plain lists of rows.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Rat = Fraction
Matrix = list  # list[list[Fraction]], row-major


class NonSquare(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def to_matrix(rows) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def transpose(rows, ncols: int | None = None) -> Matrix:
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


def matvec(rows, v) -> list:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


def _ints(rows):
    """Return rows as ints if every entry is integral, else None."""
    out = []
    for row in rows:
        r = []
        for v in row:
            if isinstance(v, int):
                r.append(v)
            elif isinstance(v, Fraction) and v.denominator == 1:
                r.append(v.numerator)
            else:
                return None
        out.append(r)
    return out


def _clear_denominators(rows):
    from math import lcm

    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        m = 1
        for v in fr:
            m = lcm(m, v.denominator)
        out.append([int(v * m) for v in fr])
    return out


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Pivots are taken from the first column (left to right) that still has a
    nonzero entry among the unreduced rows; the first such row is used.
    """
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def rank(rows) -> int:
    """Row rank of a rational matrix."""
    rows = list(rows)
    if not rows or not rows[0]:
        return 0
    ints = _ints(rows)
    if ints is None:
        ints = _clear_denominators(rows)
    return bareiss_rank(ints)


def det(rows) -> Fraction:
    """Exact determinant via Bareiss elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"matrix is not square ({n} rows)")
    if n == 0:
        return Fraction(1)
    a = [[Fraction(v) for v in r] for r in rows]
    scale = Fraction(1)
    ints = _ints(a)
    if ints is None:
        from math import lcm

        ints = []
        for row in a:
            m = 1
            for v in row:
                m = lcm(m, v.denominator)
            scale /= m
            ints.append([int(v * m) for v in row])
    a = ints
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]``.
    """
    a = [[Fraction(v) for v in r] for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        pr = a[r]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(rows, ncols: int | None = None) -> list:
    """Basis of the right kernel, one vector per free column (in column order).

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the basis is the reduced echelon one and is deterministic.
    """
    if ncols is None:
        if not rows:
            raise DimensionMismatch("ncols required for an empty matrix")
        ncols = len(rows[0])
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(rows, b: Sequence):
    """One exact solution of ``rows @ v = b``, or ``None`` if inconsistent."""
    if len(rows) != len(b):
        raise DimensionMismatch(f"{len(rows)} rows but rhs of length {len(b)}")
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    v = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        v[pc] = row[ncols]
    return v


def inverse(rows) -> Matrix:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare("matrix is not square")
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


class Echelon:
    """Incrementally maintained row-echelon basis of a growing row space.

    Used wherever a span is built one vector at a time (ideal slices,
    polynomial spans) so that redundant vectors are discarded early.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list = []  # normalized so the pivot entry is 1
        self.pivots: list = []

    def __len__(self):
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) == self.ncols

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        if self.full:
            return False
        w = self.reduce(v)
        pc = next((i for i, x in enumerate(w) if x), None)
        if pc is None:
            return False
        inv = 1 / w[pc]
        w = [x * inv for x in w]
        # keep earlier rows reduced at the new pivot
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c:
                self.rows[i] = [x - c * y for x, y in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(pc)
        return True

    def contains(self, v) -> bool:
        return not any(self.reduce(v))
