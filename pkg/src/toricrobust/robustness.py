"""T_ω-indispensable sets, the strongly robustness complex and
generalized Lawrence matrices.

Subsets ω of [s] are frozensets of 0-based column indices of T.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bases import BasisSet, graver, indispensable_set, is_strongly_robust
from .bouquet import DMap, Kind, bouquet_decomposition, bouquet_matrix, is_simple
from .errors import NotSimple, ToricError
from .intlin import IntMatrix, as_matrix, ext_gcd, gale_transform, require_grading, same_lattice


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward closed family of subsets of range(n)."""

    n: int
    faces: frozenset = field(default_factory=frozenset)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    @property
    def vertices(self) -> frozenset:
        return frozenset(i for f in self.faces for i in f)

    @property
    def facets(self) -> tuple:
        fs = [f for f in self.faces if not any(f < g for g in self.faces)]
        return tuple(sorted(fs, key=lambda f: (len(f), sorted(f))))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def is_downward_closed(self) -> bool:
        return all(frozenset(sub) in self.faces
                   for f in self.faces for r in range(len(f)) for sub in itertools.combinations(f, r))

    def sorted_faces(self) -> list:
        return sorted((tuple(sorted(f)) for f in self.faces), key=lambda f: (len(f), f))


def _check_omega(omega: Iterable[int], s: int) -> frozenset:
    omega = frozenset(int(i) for i in omega)
    bad = [i for i in omega if not 0 <= i < s]
    if bad:
        raise ToricError(f"omega index out of range: {sorted(bad)}")
    return omega


def lambda_omega(T, omega: Iterable[int] = ()) -> IntMatrix:
    """Second Lawrence lifting [[T, 0], [I, I]] minus row m+i and column s+i for i in ω."""
    T = as_matrix(T)
    m, s = T.shape
    omega = _check_omega(omega, s)
    keep = [i for i in range(s) if i not in omega]
    rows = [tuple(r) + (0,) * len(keep) for r in T.rows]
    for i in keep:
        rows.append(tuple(int(j == i) for j in range(s)) + tuple(int(j == i) for j in keep))
    return IntMatrix(tuple(rows))


def _require_simple(T) -> IntMatrix:
    T = as_matrix(T)
    require_grading(T)
    if not is_simple(T):
        raise NotSimple()
    return T


def s_omega(T, omega: Iterable[int]) -> BasisSet:
    """Graver elements u of T whose lift D(u) is indispensable in Λ(T)_ω."""
    T = _require_simple(T)
    omega = _check_omega(omega, T.ncols)
    A = lambda_omega(T, omega)
    dmap = DMap.of(A)
    dec = dmap.decomposition
    if dec.s != T.ncols or dec.signature != omega:
        raise ArithmeticError("Lawrence lifting does not realise the requested signature")
    S = indispensable_set(A)
    return BasisSet.of(u for u in graver(T) if dmap.forward(u) in S)


def is_face(T, omega: Iterable[int], method: str = "lawrence") -> bool:
    T = as_matrix(T)
    omega = _check_omega(omega, T.ncols)
    A = lambda_omega(T, omega)
    if method == "codim2":
        from .codim2 import is_strongly_robust_codim2
        return is_strongly_robust_codim2(A)
    return is_strongly_robust(A)


def delta_complex(T, method: str = "lawrence") -> SimplicialComplex:
    """The strongly robustness complex Δ_T.

    ω is a face iff Λ(T)_ω is strongly robust.  Candidates are visited by
    size, and a set is only tested when all its facets are faces.  With
    ``method="codim2"`` the ground set is restricted to indices that are not
    vertices of the central polygon and each test uses Hilbert bases.
    """
    T = _require_simple(T)
    s = T.ncols
    ground = list(range(s))
    if method == "codim2":
        from .codim2 import central_polygon
        poly = central_polygon(T)
        ground = [i for i in range(s) if not poly.is_vertex[i]]
    elif method != "lawrence":
        raise ValueError(f"unknown method {method!r}")
    if not is_face(T, (), method):
        raise ArithmeticError("the empty set must be a face of the strongly robustness complex")
    faces = {frozenset()}
    for size in range(1, len(ground) + 1):
        nxt = []
        for cand in itertools.combinations(ground, size):
            cand = frozenset(cand)
            if not all(cand - {i} in faces for i in cand):
                continue
            if is_face(T, cand, method):
                nxt.append(cand)
        if not nxt:
            break
        faces.update(nxt)
    return SimplicialComplex(s, frozenset(faces))


# ------------------------------------------------ generalized Lawrence

@dataclass(frozen=True)
class GLMSpec:
    """Data for a generalized Lawrence matrix: T, one c-vector per column
    of T (first entry positive, gcd 1) and λ with λ_i · c_i = 1."""

    T: IntMatrix
    cvecs: tuple
    lambdas: tuple

    def __post_init__(self):
        T = as_matrix(self.T)
        cvecs = tuple(tuple(int(x) for x in c) for c in self.cvecs)
        lambdas = tuple(tuple(int(x) for x in l) for l in self.lambdas)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "cvecs", cvecs)
        object.__setattr__(self, "lambdas", lambdas)
        if len(cvecs) != T.ncols or len(lambdas) != T.ncols:
            raise ToricError("need one c-vector and one λ-vector per column of T")
        for i, (c, l) in enumerate(zip(cvecs, lambdas)):
            if not c or c[0] <= 0:
                raise ToricError(f"c_{i + 1} must start with a positive entry")
            if not all(c):
                raise ToricError(f"c_{i + 1} has a zero entry")
            if len(l) != len(c) or sum(a * b for a, b in zip(l, c)) != 1:
                raise ToricError(f"λ_{i + 1} · c_{i + 1} != 1")

    @classmethod
    def from_cvecs(cls, T, cvecs: Sequence[Sequence[int]]) -> GLMSpec:
        """Fill in λ by the extended Euclidean algorithm."""
        lambdas = []
        for c in cvecs:
            g, coeffs = c[0], [1] + [0] * (len(c) - 1)
            for j in range(1, len(c)):
                g, x, y = ext_gcd(g, c[j])
                coeffs = [x * t for t in coeffs]
                coeffs[j] = y
            if g != 1:
                raise ToricError(f"c-vector {tuple(c)} is not primitive")
            lambdas.append(tuple(coeffs))
        return cls(as_matrix(T), tuple(tuple(c) for c in cvecs), tuple(lambdas))

    @property
    def omega(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.cvecs) if all(x > 0 for x in c))


def generalized_lawrence(spec: GLMSpec) -> IntMatrix:
    """Block matrix [[t_1 λ_1ᵀ ... t_s λ_sᵀ], diag(L_1, ..., L_s)].

    L_i has one row per j >= 2, with -c_{ij} in the first column of the
    block and c_{i1} in column j, so that its integer kernel is Z c_i.
    """
    T = spec.T
    m = T.nrows
    ncols = sum(len(c) for c in spec.cvecs)
    rows = [[0] * ncols for _ in range(m)]
    lower = []
    offset = 0
    for i, (c, lam) in enumerate(zip(spec.cvecs, spec.lambdas)):
        t = T.col(i)
        for j, l in enumerate(lam):
            for r in range(m):
                rows[r][offset + j] = t[r] * l
        for j in range(1, len(c)):
            row = [0] * ncols
            row[offset] = -c[j]
            row[offset + j] = c[0]
            lower.append(row)
        offset += len(c)
    return IntMatrix(tuple(tuple(r) for r in rows + lower))


def glm_postconditions(spec: GLMSpec, D=None) -> list:
    """Problems with D as a realisation of ``spec`` (empty list when fine)."""
    D = as_matrix(D) if D is not None else generalized_lawrence(spec)
    problems = []
    dec = bouquet_decomposition(D)
    if dec.s != spec.T.ncols:
        problems.append(f"expected {spec.T.ncols} bouquets, found {dec.s}")
        return problems
    free_T = [i for i, row in enumerate(gale_transform(spec.T).rows) if not any(row)]
    for i, (b, c) in enumerate(zip(dec.bouquets, spec.cvecs)):
        if i in free_T:
            if b.kind is not Kind.FREE:
                problems.append(f"bouquet {i + 1} should be free")
            continue
        if b.coefficients != c:
            problems.append(f"bouquet {i + 1} has c-vector {b.coefficients}, expected {c}")
        want = Kind.NONMIXED if all(x > 0 for x in c) else Kind.MIXED
        if b.kind is not want:
            problems.append(f"bouquet {i + 1} is {b.kind.value}, expected {want.value}")
    AB = bouquet_matrix(D, dec)
    if not same_lattice(gale_transform(AB).basis, gale_transform(spec.T).basis):
        problems.append("kernel of the bouquet matrix differs from Ker(T)")
    return problems

