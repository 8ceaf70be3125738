"""Exact integer linear algebra.

Everything here works on Python ints (arbitrary precision) and
``fractions.Fraction``; there is no floating point anywhere.  Vectors are
plain tuples of ints.  Matrices are :class:`IntMatrix` values, which are
hashable so that expensive results can be cached per matrix.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import NotPositivelyGraded, ToricError

Vector = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major as a tuple of tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"row {i} has {len(r)} entries, expected {width}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int | None = None) -> IntMatrix:
        columns = [tuple(c) for c in columns]
        if not columns:
            raise ValueError("no columns given")
        return cls(tuple(zip(*columns)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @property
    def columns(self) -> tuple:
        return tuple(zip(*self.rows))

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.columns)

    def __matmul__(self, v):
        if isinstance(v, IntMatrix):
            cols = v.columns
            return IntMatrix.from_columns([self @ c for c in cols])
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.rows)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def as_matrix(A) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix(tuple(tuple(r) for r in A))


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


# ---------------------------------------------------------------- vectors

def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def pos_part(u) -> Vector:
    return tuple(x if x > 0 else 0 for x in u)


def neg_part(u) -> Vector:
    return tuple(-x if x < 0 else 0 for x in u)


def support(u) -> frozenset:
    return frozenset(i for i, x in enumerate(u) if x)


def normalize_sign(u) -> Vector:
    """Return ``u`` or ``-u``, whichever has a positive first nonzero entry."""
    for x in u:
        if x:
            return tuple(u) if x > 0 else tuple(-y for y in u)
    return tuple(u)


def primitive_part(v) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(x) for x in v)
    g = math.gcd(*v) if v else 0
    if g == 0:
        raise ValueError("primitive part of the zero vector is undefined")
    return tuple(x // g for x in v)


def conformal_le(g, f) -> bool:
    """``g ⊑ f``: g⁺ ≤ f⁺ and g⁻ ≤ f⁻ componentwise."""
    for a, b in zip(g, f):
        if a > 0:
            if b < a:
                return False
        elif a < 0:
            if b > a:
                return False
    return True


def ext_gcd(a: int, b: int) -> tuple:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


# -------------------------------------------------------- echelon / kernel

def _column_echelon(A: IntMatrix):
    """Column-style Hermite normal form.

    Returns ``(H, U, pivots)`` as lists of columns with ``A U = H``, U
    unimodular, and H in reduced column echelon form: the first
    ``len(pivots)`` columns carry positive pivots at rows ``pivots`` and every
    other column of H is zero.
    """
    m, n = A.nrows, A.ncols
    H = [list(c) for c in A.columns]
    U = [[int(i == j) for i in range(n)] for j in range(n)]
    pivots = []
    p = 0
    for r in range(m):
        if p == n:
            break
        for j in range(p + 1, n):
            b = H[j][r]
            if b == 0:
                continue
            a = H[p][r]
            g, x, y = ext_gcd(a, b)
            ag, bg = a // g, b // g
            for M in (H, U):
                cp, cj = M[p], M[j]
                M[p] = [x * s + y * t for s, t in zip(cp, cj)]
                M[j] = [-bg * s + ag * t for s, t in zip(cp, cj)]
        piv = H[p][r]
        if piv == 0:
            continue
        if piv < 0:
            H[p] = [-s for s in H[p]]
            U[p] = [-s for s in U[p]]
            piv = -piv
        for k in range(p):
            q = H[k][r] // piv
            if q:
                H[k] = [s - q * t for s, t in zip(H[k], H[p])]
                U[k] = [s - q * t for s, t in zip(U[k], U[p])]
        pivots.append(r)
        p += 1
    return H, U, pivots


def rank(A) -> int:
    return len(_column_echelon(as_matrix(A))[2])


def hermite_columns(vectors: Sequence[Sequence[int]]) -> tuple:
    """Canonical basis (column HNF) of the lattice spanned by ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return ()
    H, _, pivots = _column_echelon(IntMatrix.from_columns(vectors))
    return tuple(tuple(H[j]) for j in range(len(pivots)))


@dataclass(frozen=True)
class GaleTransform:
    """n x k matrix whose columns are a lattice basis of Ker_Z(A)."""

    n: int
    basis: tuple  # k columns, each a length-n tuple

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def rows(self) -> tuple:
        """The Gale vectors b_1, ..., b_n (each of length k)."""
        if not self.basis:
            return tuple(() for _ in range(self.n))
        return tuple(zip(*self.basis))

    def matrix(self) -> IntMatrix:
        return IntMatrix(self.rows)

    def combine(self, z) -> Vector:
        """The kernel vector ``G z``."""
        out = [0] * self.n
        for c, col in zip(z, self.basis):
            if c:
                for i, x in enumerate(col):
                    out[i] += c * x
        return tuple(out)


@functools.lru_cache(maxsize=None)
def _gale(A: IntMatrix) -> GaleTransform:
    _, U, pivots = _column_echelon(A)
    kernel = [U[j] for j in range(len(pivots), A.ncols)]
    return GaleTransform(A.ncols, hermite_columns(kernel))


def gale_transform(A) -> GaleTransform:
    """Saturated kernel lattice basis of ``A`` in column Hermite normal form.

    Columns of the unimodular transform that kill ``A`` span all of
    Ker_Z(A), not just a finite-index sublattice.
    """
    return _gale(as_matrix(A))


def same_lattice(U: Sequence[Sequence[int]], V: Sequence[Sequence[int]]) -> bool:
    return hermite_columns(U) == hermite_columns(V)


def in_lattice(v, basis) -> bool:
    """Whether ``v`` is an integer combination of ``basis``."""
    v = tuple(v)
    if not any(v):
        return True
    if not basis:
        return False
    return hermite_columns(list(basis) + [v]) == hermite_columns(basis)


def integer_solution(A, b) -> Vector | None:
    """Some x in Z^n with A x = b, or None if there is none."""
    A = as_matrix(A)
    H, U, pivots = _column_echelon(A)
    z = []
    for j, r in enumerate(pivots):
        s = b[r] - sum(H[k][r] * z[k] for k in range(j))
        q, rem = divmod(s, H[j][r])
        if rem:
            return None
        z.append(q)
    x = [0] * A.ncols
    for j, zj in enumerate(z):
        if zj:
            for i, u in enumerate(U[j]):
                x[i] += zj * u
    x = tuple(x)
    if A @ x != tuple(b):
        return None
    return x


def solve_rational(M: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One rational solution of ``M x = rhs`` (free variables set to 0)."""
    rows = [[Fraction(x) for x in r] + [Fraction(c)] for r, c in zip(M, rhs)]
    nvar = len(M[0]) if M else 0
    piv_cols = []
    r = 0
    for c in range(nvar):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return None
    x = [Fraction(0)] * nvar
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][-1]
    return x


# ------------------------------------------------------- positive grading

@dataclass(frozen=True)
class GradingCertificate:
    """A rational vector y with y·a_i > 0 for every column a_i."""

    y: tuple

    def column_weights(self, A) -> tuple:
        A = as_matrix(A)
        return tuple(dot(self.y, c) for c in A.columns)

    def is_valid_for(self, A) -> bool:
        A = as_matrix(A)
        return len(self.y) == A.nrows and all(w > 0 for w in self.column_weights(A))

    def integer_weights(self, A) -> tuple:
        """Column weights scaled to coprime positive integers."""
        w = self.column_weights(A)
        den = math.lcm(*(Fraction(x).denominator for x in w))
        iw = [int(x * den) for x in w]
        g = math.gcd(*iw)
        return tuple(x // g for x in iw)


def _phase_one(M: Sequence[Sequence], d: Sequence) -> list | None:
    """Exact phase-one simplex: some x >= 0 with M x = d, or None."""
    p = len(M)
    q = len(M[0]) if p else 0
    tab = []
    for i in range(p):
        row = [Fraction(x) for x in M[i]] + [Fraction(int(i == j)) for j in range(p)] + [Fraction(d[i])]
        if row[-1] < 0:
            row = [-x for x in row[:q]] + row[q:q + p] + [-row[-1]]
        tab.append(row)
    width = q + p
    basis = [q + i for i in range(p)]
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(q):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(p):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # cannot happen in phase one (objective bounded below)
            break
        pv = tab[leave][enter]
        tab[leave] = [x / pv for x in tab[leave]]
        for i in range(p):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * q
    for i, b in enumerate(basis):
        if b < q:
            x[b] = tab[i][-1]
    return x


def grading_certificate(A) -> GradingCertificate | None:
    """A strictly positive functional on the columns of A, if one exists.

    Exists iff Ker_Z(A) ∩ N^n = {0}.  Tries the all-ones vector and the unit
    vectors first, then solves the feasibility LP exactly: find z >= 1 in the
    row space (z orthogonal to the kernel), then y with yA = z.
    """
    A = as_matrix(A)
    m, n = A.shape
    trials = [(1,) * m] + [tuple(int(i == j) for i in range(m)) for j in range(m)]
    for y in trials:
        cert = GradingCertificate(tuple(Fraction(x) for x in y))
        if cert.is_valid_for(A):
            return cert
    G = gale_transform(A)
    if G.k == 0:
        z = [Fraction(1)] * n
    else:
        M = [list(col) for col in G.basis]
        d = [-sum(col) for col in G.basis]
        zp = _phase_one(M, d)
        if zp is None:
            return None
        z = [1 + x for x in zp]
    y = solve_rational([list(c) for c in A.columns], z)
    if y is None:  # z is orthogonal to the kernel, so this is unreachable
        raise ArithmeticError("row-space solve failed")
    cert = GradingCertificate(tuple(y))
    assert cert.is_valid_for(A)
    return cert


def require_grading(A) -> GradingCertificate:
    cert = grading_certificate(A)
    if cert is None:
        raise NotPositivelyGraded()
    return cert


# ----------------------------------------------------- lattice enumeration

def _fm_bounds(M: tuple, k: int, j: int) -> tuple:
    """Fourier-Motzkin multipliers bounding variable j of ``M z <= h``.

    Variables ``0..j-1`` are assumed fixed (folded into h) and ``j+1..k-1``
    are eliminated.  Each entry ``(a, lam)`` encodes ``a * z_j <= lam · h``.
    Chernikov's rule drops combinations of more than ``t + 1`` original rows
    after ``t`` eliminations.
    """
    n = len(M)
    rows = []
    for i in range(n):
        coeffs = tuple(M[i][j:k])
        lam = tuple(int(t == i) for t in range(n))
        rows.append((coeffs, lam))
    width = k - j
    eliminated = 0
    for var in range(width - 1, 0, -1):
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        new = [r for r in rows if r[0][var] == 0]
        eliminated += 1
        for (cp, lp) in pos:
            for (cn, ln) in neg:
                a, b = cp[var], -cn[var]
                lam = tuple(b * s + a * t for s, t in zip(lp, ln))
                if sum(1 for x in lam if x) > eliminated + 1:
                    continue
                coeffs = tuple(b * s + a * t for s, t in zip(cp, cn))
                g = math.gcd(*coeffs, *lam)
                new.append((tuple(c // g for c in coeffs), tuple(x // g for x in lam)))
        seen = set()
        rows = []
        for r in new:
            if r not in seen:
                seen.add(r)
                rows.append(r)
    return tuple((c[0], lam) for c, lam in rows if c[0] != 0 or any(lam))


class LatticePolytope:
    """Integer points of a bounded polyhedron ``{z in Z^k : M z <= h}``.

    The Fourier-Motzkin projections depend only on M, so they are computed
    once and reused for every right-hand side.
    """

    def __init__(self, M: Sequence[Sequence[int]]):
        self.M = tuple(tuple(int(x) for x in r) for r in M)
        self.k = len(self.M[0]) if self.M else 0
        self.levels = [_fm_bounds(self.M, self.k, j) for j in range(self.k)]

    def points(self, h: Sequence[int]) -> Iterator[tuple]:
        h = list(h)
        if len(h) != len(self.M):
            raise ValueError("right-hand side has wrong length")
        yield from self._walk(0, h, [])

    def _walk(self, j, h, prefix):
        if j == self.k:
            if all(x >= 0 for x in h):
                yield tuple(prefix)
            return
        lo = hi = None
        for a, lam in self.levels[j]:
            rhs = dot(lam, h)
            if a > 0:
                b = rhs // a
                hi = b if hi is None else min(hi, b)
            elif a < 0:
                b = -(rhs // -a)
                lo = b if lo is None else max(lo, b)
            elif rhs < 0:
                return
        if lo is None or hi is None:
            raise ToricError("lattice polytope is unbounded")
        col = [r[j] for r in self.M]
        for z in range(lo, hi + 1):
            yield from self._walk(j + 1, [x - c * z for x, c in zip(h, col)], prefix + [z])


@functools.lru_cache(maxsize=None)
def _polytope(M: tuple) -> LatticePolytope:
    return LatticePolytope(M)


def kernel_points_below(A, upper) -> Iterator[Vector]:
    """All v in Ker_Z(A) with v <= upper componentwise (finite when graded)."""
    G = gale_transform(A)
    if G.k == 0:
        if all(x >= 0 for x in upper):
            yield (0,) * G.n
        return
    poly = _polytope(G.rows)
    for z in poly.points(upper):
        yield G.combine(z)


def fiber_enumerate(A, y: GradingCertificate, b) -> tuple:
    """All x in N^n with A x = b, sorted lexicographically.

    Each coordinate is bounded by (y·b)/(y·a_i) because y is a positive
    grading; the enumeration itself walks the lattice ``x0 + Ker_Z(A)``
    inside the non-negative orthant.
    """
    A = as_matrix(A)
    b = tuple(b)
    if not isinstance(y, GradingCertificate):
        y = GradingCertificate(tuple(Fraction(t) for t in y))
    if not y.is_valid_for(A):
        raise NotPositivelyGraded("invalid grading certificate for this matrix")
    if len(b) != A.nrows:
        raise ValueError("degree vector has wrong length")
    x0 = integer_solution(A, b)
    if x0 is None or dot(y.y, b) < 0:
        return ()
    G = gale_transform(A)
    if G.k == 0:
        return (x0,) if all(x >= 0 for x in x0) else ()
    neg = tuple(tuple(-x for x in r) for r in G.rows)
    poly = _polytope(neg)
    out = []
    for z in poly.points(x0):
        v = G.combine(z)
        out.append(tuple(a + c for a, c in zip(x0, v)))
    out.sort()
    return tuple(out)


def fiber(A, b) -> tuple:
    """Fiber of degree b using a freshly computed grading certificate."""
    return fiber_enumerate(A, require_grading(A), b)


def iter_box(bounds: Iterable[int]) -> Iterator[tuple]:
    return itertools.product(*(range(b + 1) for b in bounds))
