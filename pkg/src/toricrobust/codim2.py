"""Codimension two: reduced Gale diagrams and Hilbert bases of plane cones.

A vector u in Z^2 stands for the kernel vector B u, where B is the Gale
transform the diagram was built from.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

from .bases import BasisSet
from .errors import CodimensionError, ToricError
from .intlin import IntMatrix, as_matrix, gale_transform, require_grading, same_lattice


def cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _half(p) -> int:
    return 0 if p[1] > 0 or (p[1] == 0 and p[0] > 0) else 1


def angle_key(p):
    """Sort key for counter-clockwise order starting at the positive x-axis."""
    return functools.cmp_to_key(lambda a, b: (_half(a) - _half(b)) or (-1 if cross(a, b) > 0 else (1 if cross(a, b) < 0 else 0)))(p)


def reduce_ray(b) -> tuple:
    """Rotate a Gale row by 90 degrees and make it primitive; (0,0) stays."""
    if not any(b):
        return (0, 0)
    g = math.gcd(b[0], b[1])
    return (-b[1] // g, b[0] // g)


@dataclass(frozen=True)
class ReducedGaleDiagram:
    gale: tuple  # rows b_i of the Gale transform used
    rays: tuple  # reduced rays, one per column

    @property
    def order(self) -> tuple:
        """Distinct nonzero rays in counter-clockwise order."""
        return tuple(sorted({r for r in self.rays if any(r)}, key=angle_key))

    def cones(self) -> list:
        """Cones spanned by consecutive rays b̃_i, b̃_{i+1}."""
        order = self.order
        return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]

    def chambers(self) -> list:
        """Cones between consecutive rays of ±b̃.

        Their interiors are exactly the regions where the sign pattern of
        B u is constant, so each one maps onto the lattice points of one
        orthant of the kernel.
        """
        rays = {r for r in self.rays if any(r)}
        rays |= {(-r[0], -r[1]) for r in rays}
        order = sorted(rays, key=angle_key)
        return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]

    def kernel_vector(self, u) -> tuple:
        return tuple(b[0] * u[0] + b[1] * u[1] for b in self.gale)


def _check_gale(A: IntMatrix, gale):
    if gale is None:
        G = gale_transform(A)
        if G.k != 2:
            raise CodimensionError(f"codimension is {G.k}, not 2")
        return G.rows
    gale = tuple(tuple(int(x) for x in r) for r in gale)
    if len(gale) != A.ncols or any(len(r) != 2 for r in gale):
        raise CodimensionError("Gale matrix must be n x 2")
    cols = list(zip(*gale))
    if any(any(A @ c) for c in cols) or not same_lattice(cols, gale_transform(A).basis):
        raise ToricError("columns do not form a basis of the kernel lattice")
    return gale


def reduced_gale_diagram(A, gale: Sequence[Sequence[int]] | None = None) -> ReducedGaleDiagram:
    """Reduced Gale diagram of a codimension-2 positively graded matrix.

    ``gale`` may supply a specific Gale transform (n x 2, rows b_i); by
    default the canonical one from :func:`gale_transform` is used.
    """
    A = as_matrix(A)
    require_grading(A)
    rows = _check_gale(A, gale)
    return ReducedGaleDiagram(rows, tuple(reduce_ray(b) for b in rows))


@dataclass(frozen=True)
class HilbertBasis2D:
    u: tuple
    v: tuple
    basis: tuple

    def in_cone(self, p) -> bool:
        return _in_cone(self.u, self.v, p)

    def __contains__(self, p):
        return tuple(p) in self.basis


def _in_cone(u, v, p) -> bool:
    d = cross(u, v)
    if d == 0:
        return cross(u, p) == 0 and u[0] * p[0] + u[1] * p[1] >= 0
    a, b = cross(p, v), cross(u, p)
    if d < 0:
        a, b = -a, -b
    return a >= 0 and b >= 0


def _primitive(p) -> tuple:
    g = math.gcd(*p)
    return (p[0] // g, p[1] // g)


def hilbert_basis_2d(u, v) -> HilbertBasis2D:
    """Minimal generating set of cone(u, v) ∩ Z^2.

    Candidates are the primitive generators plus the lattice points of the
    half-open fundamental parallelogram; a candidate is dropped when
    subtracting another candidate leaves a nonzero cone point.
    """
    u, v = tuple(u), tuple(v)
    if not any(u) or not any(v):
        raise ToricError("cone generators must be nonzero")
    pu, pv = _primitive(u), _primitive(v)
    d = cross(pu, pv)
    if d == 0:
        if pu == pv:
            return HilbertBasis2D(u, v, (pu,))
        raise ToricError("degenerate cone: generators are opposite")
    cand = {pu, pv}
    xs = [0, pu[0], pv[0], pu[0] + pv[0]]
    ys = [0, pu[1], pv[1], pu[1] + pv[1]]
    ad = abs(d)
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            a, b = cross((x, y), pv), cross(pu, (x, y))
            if d < 0:
                a, b = -a, -b
            if 0 <= a < ad and 0 <= b < ad and (x, y) != (0, 0):
                cand.add((x, y))
    basis = []
    for p in cand:
        reducible = False
        for c in cand:
            if c == p:
                continue
            r = (p[0] - c[0], p[1] - c[1])
            if _in_cone(pu, pv, r):
                reducible = True
                break
        if not reducible:
            basis.append(p)
    return HilbertBasis2D(u, v, tuple(sorted(basis, key=angle_key)))


def hilbert_union(diagram: ReducedGaleDiagram) -> frozenset:
    out = set()
    for u, v in diagram.cones():
        out.update(hilbert_basis_2d(u, v).basis)
    return frozenset(out)


def chamber_union(diagram: ReducedGaleDiagram) -> frozenset:
    out = set()
    for u, v in diagram.chambers():
        out.update(hilbert_basis_2d(u, v).basis)
    return frozenset(out)


def graver_and_indispensable_codim2(A, gale=None) -> tuple:
    """(Graver basis, indispensable set) from Hilbert bases of plane cones.

    Graver elements are the B u with u in the Hilbert basis of a chamber
    cut out by the lines through the b̃_i.  Indispensable elements are the
    B u with both u and -u in H_1 ∪ ... ∪ H_n', the Hilbert bases of the
    cones between consecutive b̃_i.  Taking Graver elements from the H_i as
    well would be too coarse: for A = (1 3 6) it misses (3, 1, -1).
    """
    diag = reduced_gale_diagram(A, gale)
    H = hilbert_union(diag)
    gr = BasisSet.of(diag.kernel_vector(h) for h in chamber_union(diag))
    ind = BasisSet.of(diag.kernel_vector(h) for h in H if (-h[0], -h[1]) in H)
    return gr, ind


def circuits_codim2(A, gale=None) -> BasisSet:
    diag = reduced_gale_diagram(A, gale)
    return BasisSet.of(diag.kernel_vector(r) for r in diag.rays if any(r))


def circuit_criterion(A, gale=None) -> bool:
    """Every circuit indispensable: both ±b̃_i lie in the Hilbert bases."""
    diag = reduced_gale_diagram(A, gale)
    H = hilbert_union(diag)
    return all(r in H and (-r[0], -r[1]) in H for r in diag.rays if any(r))


def is_strongly_robust_codim2(A, gale=None) -> bool:
    gr, ind = graver_and_indispensable_codim2(A, gale)
    full = gr == ind
    if full != circuit_criterion(A, gale):
        raise ArithmeticError("circuit criterion disagrees with the Graver criterion")
    return full


@dataclass(frozen=True)
class CentralPolygon:
    vertices: tuple  # counter-clockwise
    is_vertex: tuple  # per column of T: whether its reduced ray is a vertex


def convex_hull(points) -> list:
    """Strict vertices of the convex hull, counter-clockwise (monotone chain)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross((out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                                          (p[0] - out[-2][0], p[1] - out[-2][1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def central_polygon(T, gale=None) -> CentralPolygon:
    """conv(±t̃_i) and, per index, whether t̃_i is one of its vertices."""
    diag = reduced_gale_diagram(T, gale)
    pts = [r for r in diag.rays if any(r)] + [(-r[0], -r[1]) for r in diag.rays if any(r)]
    hull = convex_hull(pts)
    hs = set(hull)
    return CentralPolygon(tuple(hull), tuple(any(r) and r in hs for r in diag.rays))
