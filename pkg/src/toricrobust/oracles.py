"""Brute-force reference implementations.

These are slow, direct readings of the definitions and are meant for
cross-checking the main algorithms on small inputs.  They share only the
lattice basis and the grading certificate with the main code.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ToricError
from .intlin import (
    GradingCertificate,
    IntMatrix,
    as_matrix,
    gale_transform,
    neg_part,
    normalize_sign,
    pos_part,
    rank,
    require_grading,
    solve_rational,
)


def box_fiber(A, b, cert: GradingCertificate | None = None) -> tuple:
    """All x in N^n with A x = b, by depth-first search over the degree box."""
    A = as_matrix(A)
    cert = cert or require_grading(A)
    w = cert.column_weights(A)
    total = sum(Fraction(y) * x for y, x in zip(cert.y, b))
    bounds = [math.floor(total / wi) for wi in w]
    cols = A.columns
    n = A.ncols
    out = []
    # per row and suffix j: can columns j.. still raise / lower that row?
    up = [[any(c[r] > 0 for c in cols[j:]) for r in range(A.nrows)] for j in range(n + 1)]
    down = [[any(c[r] < 0 for c in cols[j:]) for r in range(A.nrows)] for j in range(n + 1)]

    def walk(j, rest, used):
        if any((x > 0 and not up[j][r]) or (x < 0 and not down[j][r]) for r, x in enumerate(rest)):
            return
        if j == n:
            out.append(tuple(used))
            return
        for x in range(bounds[j] + 1):
            if sum(wi * ui for wi, ui in zip(w, used)) + w[j] * x > total:
                break
            walk(j + 1, tuple(r - x * c for r, c in zip(rest, cols[j])), used + [x])

    if total >= 0:
        walk(0, tuple(b), [])
    return tuple(sorted(out))


# ---------------------------------------------------------- kernel boxes

def _det(M) -> Fraction:
    M = [[Fraction(x) for x in r] for r in M]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return d


def kernel_box(A, lo, hi) -> Iterator[tuple]:
    """Every v in Ker_Z(A) with lo <= v <= hi, including 0 if it fits.

    A kernel vector is determined by its values on d coordinates whose Gale
    rows are independent; the cheapest such set is enumerated.
    """
    A = as_matrix(A)
    G = gale_transform(A)
    d, n = G.k, A.ncols
    if d == 0:
        if all(l <= 0 <= h for l, h in zip(lo, hi)):
            yield (0,) * n
        return
    rows = G.rows
    best = None
    for S in itertools.combinations(range(n), d):
        if _det([rows[i] for i in S]) != 0:
            size = math.prod(hi[i] - lo[i] + 1 for i in S)
            if best is None or size < best[0]:
                best = (size, S)
    S = best[1]
    sub = [rows[i] for i in S]
    for vals in itertools.product(*(range(lo[i], hi[i] + 1) for i in S)):
        z = solve_rational(sub, vals)
        if z is None or any(Fraction(x).denominator != 1 for x in z):
            continue
        v = G.combine([int(x) for x in z])
        if all(l <= x <= h for l, x, h in zip(lo, v, hi)):
            yield v


def box_size(A, lo, hi) -> int:
    """Number of candidates kernel_box would visit."""
    A = as_matrix(A)
    G = gale_transform(A)
    rows = G.rows
    sizes = [math.prod(hi[i] - lo[i] + 1 for i in S)
             for S in itertools.combinations(range(A.ncols), G.k)
             if _det([rows[i] for i in S]) != 0]
    return min(sizes) if sizes else 1


# --------------------------------------------------------------- circuits

def brute_circuits(A) -> frozenset:
    """Primitive kernel vectors supported on minimal dependent column sets."""
    A = as_matrix(A)
    n = A.ncols
    cols = A.columns
    found = []
    for size in range(1, n + 1):
        for S in itertools.combinations(range(n), size):
            if any(set(T) <= set(S) for T in found):
                continue
            sub = IntMatrix.from_columns([cols[j] for j in S], A.nrows)
            if rank(sub) == size - 1:
                found.append(S)
    out = set()
    for S in found:
        sub = IntMatrix.from_columns([cols[j] for j in S], A.nrows)
        (k,) = gale_transform(sub).basis
        v = [0] * n
        for j, x in zip(S, k):
            v[j] = x
        out.add(normalize_sign(tuple(v)))
    return frozenset(out)


# ----------------------------------------------------------------- Graver

def graver_box_bound(A) -> int:
    """Sup-norm bound for Graver elements.

    A Graver element g is a conformal nonnegative combination of at most
    d = rank Ker(A) circuits (Carathéodory in its orthant), and every
    coefficient is < 1 unless g is itself a circuit.
    """
    A = as_matrix(A)
    C = brute_circuits(A)
    d = gale_transform(A).k
    return d * max((abs(x) for c in C for x in c), default=0)


def _conf_le(g, f) -> bool:
    return all((a == 0) or (a * b > 0 and abs(a) <= abs(b)) for a, b in zip(g, f))


def graver_box(A, bound: int | None = None) -> frozenset:
    """Conformally minimal nonzero kernel vectors in the box [-K, K]^n."""
    A = as_matrix(A)
    K = graver_box_bound(A) if bound is None else bound
    n = A.ncols
    vs = [v for v in kernel_box(A, [-K] * n, [K] * n) if any(v)]
    vs.sort(key=lambda v: sum(map(abs, v)))
    minimal = []
    for v in vs:
        if not any(_conf_le(g, v) for g in minimal):
            minimal.append(v)
    return frozenset(normalize_sign(v) for v in minimal)


# ----------------------------------------------------------------- Markov

def _connected(A, moves, start, goal, cert, cache=None) -> bool:
    if start == goal:
        return True
    cache = {} if cache is None else cache
    deg = A @ start
    if deg not in cache:
        cache[deg] = frozenset(box_fiber(A, deg, cert))
    verts = cache[deg]
    steps = [m for mv in moves for m in (mv, tuple(-x for x in mv))]
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for m in steps:
            y = tuple(a + b for a, b in zip(x, m))
            if y in verts and y not in seen:
                if y == goal:
                    return True
                seen.add(y)
                stack.append(y)
    return False


def is_markov_brute(A, moves, graver_set: Iterable, cache: dict | None = None) -> bool:
    """Moves are Markov iff they connect g⁺ to g⁻ for every Graver g."""
    A = as_matrix(A)
    cert = require_grading(A)
    moves = [tuple(m) for m in moves]
    return all(_connected(A, moves, pos_part(g), neg_part(g), cert, cache) for g in graver_set)


def all_minimal_markov(A, graver_set: Iterable, limit: int = 14) -> list:
    """Every inclusion-minimal Markov basis drawn from the Graver basis.

    Subsets are scanned by size and supersets of bases already found are
    skipped.  Exponential; refuses Graver bases larger than ``limit``.
    """
    G = sorted(graver_set)
    if len(G) > limit:
        raise ToricError(f"Graver basis has {len(G)} elements; too many for subset search")
    found: list = []
    cache: dict = {}
    for size in range(1, len(G) + 1):
        for S in itertools.combinations(G, size):
            s = frozenset(S)
            if any(f <= s for f in found):
                continue
            if is_markov_brute(A, S, G, cache):
                found.append(s)
    return found


# ------------------------------------------------------------- Gröbner

def groebner_by_fibers(A, weights, graver_set: Iterable) -> frozenset:
    """Reduced Gröbner basis read off the standard monomials.

    A monomial is standard when it is the smallest member of its fiber.
    Minimal generators of the initial ideal are the non-standard p with
    every p - e_i standard; each pairs with the minimum of its fiber.  The
    search stops at the largest Graver degree, which bounds the reduced
    basis.  Returns vectors p - q with p the leading exponent.
    """
    A = as_matrix(A)
    cert = require_grading(A)
    w = [Fraction(x) for x in weights]
    gw = cert.integer_weights(A)

    def key(p):
        return (sum(a * b for a, b in zip(w, p)), tuple(p))

    top = max((sum(a * b for a, b in zip(gw, pos_part(g))) for g in graver_set), default=0)
    fmin: dict = {}

    def minimum(p):
        deg = A @ p
        if deg not in fmin:
            fmin[deg] = min(box_fiber(A, deg, cert), key=key)
        return fmin[deg]

    out = set()
    n = A.ncols

    def walk(j, p, g):
        if j == n:
            if not any(p):
                return
            q = minimum(p)
            if q == p:
                return
            for i in range(n):
                if p[i]:
                    r = list(p)
                    r[i] -= 1
                    if minimum(tuple(r)) != tuple(r):
                        return
            out.add(tuple(a - b for a, b in zip(p, q)))
            return
        x = 0
        while g + gw[j] * x <= top:
            walk(j + 1, p + (x,), g + gw[j] * x)
            x += 1

    walk(0, (), 0)
    return frozenset(out)


# --------------------------------------------------------------- S_ω(T)

def s_omega_direct(T, omega, graver_set: Iterable) -> frozenset:
    """S_ω(T) without any Lawrence lifting.

    u stays iff there is no kernel vector v other than 0 and u such that
    v lies between 0 and u on coordinates outside ω (a conformal piece)
    and v <= u⁺ on coordinates in ω (a semiconformal piece).
    """
    T = as_matrix(T)
    cert = require_grading(T)
    c = cert.integer_weights(T)
    omega = frozenset(omega)
    out = set()
    for u in graver_set:
        u = tuple(u)
        hi = [max(x, 0) for x in u]
        lo = [0 if i in omega else min(x, 0) for i, x in enumerate(u)]
        # y·T v = 0 bounds the free lower ends
        for i in omega:
            lo[i] = -((sum(cj * h for j, (cj, h) in enumerate(zip(c, hi)) if j != i)) // c[i])
        split = any(any(v) and v != u for v in kernel_box(T, lo, hi))
        if not split:
            out.add(normalize_sign(u))
    return frozenset(out)
