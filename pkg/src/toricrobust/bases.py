"""Graver, Markov, indispensable and circuit sets of a toric ideal.

All sets are returned as :class:`BasisSet` values: sign-normalized kernel
vectors (first nonzero entry positive), sorted lexicographically.
"""

from __future__ import annotations

import functools
import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import NotInKernel
from .intlin import (
    IntMatrix,
    as_matrix,
    conformal_le,
    dot,
    fiber_enumerate,
    gale_transform,
    kernel_points_below,
    neg_part,
    normalize_sign,
    pos_part,
    require_grading,
    support,
)


@dataclass(frozen=True)
class BasisSet:
    elements: tuple

    @classmethod
    def of(cls, vectors: Iterable) -> BasisSet:
        vs = set()
        for v in vectors:
            v = normalize_sign(tuple(v))
            if not any(v):
                raise ValueError("basis sets cannot contain the zero vector")
            vs.add(v)
        return cls(tuple(sorted(vs)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v):
        return normalize_sign(tuple(v)) in self.as_set()

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def __le__(self, other):
        return self.as_set() <= BasisSet.of(other).as_set()

    def __ge__(self, other):
        return self.as_set() >= BasisSet.of(other).as_set()

    def __eq__(self, other):
        if isinstance(other, BasisSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)


# ------------------------------------------------------------------ Graver

def _reduce(s, G):
    """Conformal normal form of s with respect to the symmetric set ±G."""
    changed = True
    while changed and any(s):
        changed = False
        for g in G:
            if conformal_le(g, s):
                s = tuple(a - b for a, b in zip(s, g))
                changed = True
                break
            ng = tuple(-x for x in g)
            if conformal_le(ng, s):
                s = tuple(a - b for a, b in zip(s, ng))
                changed = True
                break
    return s


def _sign_compatible(f, g) -> bool:
    return all(a * b >= 0 for a, b in zip(f, g))


@functools.lru_cache(maxsize=None)
def _graver(A: IntMatrix) -> BasisSet:
    require_grading(A)
    basis = [normalize_sign(b) for b in gale_transform(A).basis]
    G: list = []
    heap: list = []
    counter = 0

    def push_pairs(f):
        nonlocal counter
        for g in G:
            ng = tuple(-x for x in g)
            for other in (g, ng):
                # f + other reduces to zero when the two lie in a common orthant
                if _sign_compatible(f, other):
                    continue
                h = tuple(a + b for a, b in zip(f, other))
                counter += 1
                heapq.heappush(heap, (sum(map(abs, h)), counter, h))

    for b in basis:
        s = _reduce(b, G)
        if any(s):
            s = normalize_sign(s)
            push_pairs(s)
            G.append(s)
    while heap:
        _, _, h = heapq.heappop(heap)
        s = _reduce(h, G)
        if any(s):
            s = normalize_sign(s)
            push_pairs(s)
            G.append(s)
    # keep the conformally minimal elements
    G.sort(key=lambda v: sum(map(abs, v)))
    minimal: list = []
    for v in G:
        nv = tuple(-x for x in v)
        if not any(conformal_le(g, v) or conformal_le(g, nv) for g in minimal):
            minimal.append(v)
    return BasisSet.of(minimal)


def graver(A) -> BasisSet:
    """Graver basis by completion of a lattice basis under conformal reduction."""
    return _graver(as_matrix(A))


def is_conformally_reducible(u, G: Iterable) -> bool:
    """Whether some element of ±G other than ±u is conformally below u."""
    u = tuple(u)
    nu = tuple(-x for x in u)
    for g in G:
        g = tuple(g)
        if g == u or g == nu:
            continue
        if conformal_le(g, u) or conformal_le(tuple(-x for x in g), u):
            return True
    return False


# ----------------------------------------------------------- indispensables

def _check_kernel(A: IntMatrix, u):
    u = tuple(u)
    if not any(u):
        raise ValueError("zero vector")
    if any(A @ u):
        raise NotInKernel("vector is not in the kernel")
    return u


def has_semiconformal_decomposition(u, A) -> bool:
    """Whether u = v +_sc w with v, w nonzero kernel vectors.

    The two sign conditions of a semiconformal sum amount to v <= u⁺
    componentwise, so the candidates for v are the (finitely many) kernel
    vectors below u⁺; 0 and u are always among them.
    """
    A = as_matrix(A)
    u = _check_kernel(A, u)
    require_grading(A)
    for v in kernel_points_below(A, pos_part(u)):
        if any(v) and v != u:
            return True
    return False


def is_semiconformal(v, w) -> bool:
    return all(not (a > 0 and b < 0) for a, b in zip(v, w))


@functools.lru_cache(maxsize=None)
def _indispensable(A: IntMatrix) -> BasisSet:
    return BasisSet.of(u for u in graver(A) if not has_semiconformal_decomposition(u, A))


def indispensable_set(A) -> BasisSet:
    return _indispensable(as_matrix(A))


# ------------------------------------------------------------------ Markov

@dataclass(frozen=True)
class FiberGraph:
    """Fiber of one degree with the common-support components."""

    degree: tuple
    vertices: tuple
    components: tuple  # tuple of sorted tuples of vertices, sorted by first member

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def fiber_graph(A, degree, cert=None) -> FiberGraph:
    A = as_matrix(A)
    cert = cert or require_grading(A)
    verts = fiber_enumerate(A, cert, degree)
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for col in range(A.ncols):
        hit = [i for i, x in enumerate(verts) if x[col] > 0]
        for i in hit[1:]:
            ra, rb = find(hit[0]), find(i)
            if ra != rb:
                parent[rb] = ra
    groups: dict = {}
    for i, v in enumerate(verts):
        groups.setdefault(find(i), []).append(v)
    comps = sorted(tuple(sorted(g)) for g in groups.values())
    return FiberGraph(tuple(degree), verts, tuple(comps))


@functools.lru_cache(maxsize=None)
def _markov_fibers(A: IntMatrix) -> tuple:
    """Fiber graphs of all candidate Markov degrees, in increasing degree."""
    cert = require_grading(A)
    degrees = {A @ pos_part(u) for u in graver(A)}
    order = sorted(degrees, key=lambda b: (dot(cert.y, b), b))
    return tuple(fiber_graph(A, b, cert) for b in order)


def markov_degrees(A) -> tuple:
    """Degrees b whose fiber graph is disconnected."""
    return tuple(fg.degree for fg in _markov_fibers(as_matrix(A)) if not fg.connected)


@functools.lru_cache(maxsize=None)
def _minimal_markov(A: IntMatrix) -> BasisSet:
    moves = []
    for fg in _markov_fibers(A):
        if fg.connected:
            continue
        root = fg.components[0][0]
        for comp in fg.components[1:]:
            moves.append(tuple(a - b for a, b in zip(root, comp[0])))
    return BasisSet.of(moves)


def minimal_markov(A) -> BasisSet:
    """A canonical minimal Markov basis.

    In each disconnected fiber the component containing the lexicographically
    smallest vertex is joined to every other component through their
    smallest vertices.
    """
    return _minimal_markov(as_matrix(A))


@functools.lru_cache(maxsize=None)
def _universal_markov(A: IntMatrix) -> BasisSet:
    moves = []
    for fg in _markov_fibers(A):
        comps = fg.components
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                for p in comps[i]:
                    for q in comps[j]:
                        moves.append(tuple(a - b for a, b in zip(p, q)))
    return BasisSet.of(moves)


def universal_markov(A) -> BasisSet:
    """Union of all minimal Markov bases."""
    return _universal_markov(as_matrix(A))


def indispensable_by_fibers(A) -> BasisSet:
    """Indispensables read off the fiber graphs: exactly two singleton components."""
    A = as_matrix(A)
    out = []
    for fg in _markov_fibers(A):
        comps = fg.components
        if len(comps) == 2 and len(comps[0]) == 1 and len(comps[1]) == 1:
            out.append(tuple(a - b for a, b in zip(comps[0][0], comps[1][0])))
    return BasisSet.of(out)


def connects(A, moves, start, goal, cert=None) -> bool:
    """Whether ``moves`` (used with either sign) connect start to goal in N^n."""
    A = as_matrix(A)
    start, goal = tuple(start), tuple(goal)
    if start == goal:
        return True
    cert = cert or require_grading(A)
    verts = set(fiber_enumerate(A, cert, A @ start))
    steps = []
    for m in moves:
        steps.append(tuple(m))
        steps.append(tuple(-x for x in m))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for m in steps:
            y = tuple(a - b for a, b in zip(x, m))
            if y in verts and y not in seen:
                if y == goal:
                    return True
                seen.add(y)
                queue.append(y)
    return False


def is_markov_basis(A, moves) -> bool:
    """Check that ``moves`` generate I_A: every Graver binomial is connected."""
    A = as_matrix(A)
    cert = require_grading(A)
    moves = list(moves)
    for m in moves:
        if any(A @ m):
            return False
    return all(connects(A, moves, pos_part(g), neg_part(g), cert) for g in graver(A))


# ---------------------------------------------------------------- circuits

@functools.lru_cache(maxsize=None)
def _circuits(A: IntMatrix) -> BasisSet:
    G = list(graver(A))
    supports = [support(g) for g in G]
    out = [g for g, s in zip(G, supports) if not any(t < s for t in supports)]
    return BasisSet.of(out)


def circuits(A) -> BasisSet:
    """Support-minimal Graver elements (these are primitive by construction)."""
    return _circuits(as_matrix(A))


def is_strongly_robust(A) -> bool:
    """Graver basis equals the set of indispensable elements."""
    A = as_matrix(A)
    return indispensable_set(A) == graver(A)
