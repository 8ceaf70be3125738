"""Bouquet decomposition, the bouquet matrix A_B and the kernel map D.

Two columns of A are joined when their Gale vectors are rational multiples
of each other; the connected components are the bouquets.  Column indices
are 0-based throughout.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NotInKernel, ToricError
from .intlin import IntMatrix, as_matrix, gale_transform, require_grading


class Kind(enum.Enum):
    FREE = "free"
    MIXED = "mixed"
    NONMIXED = "non-mixed"


@dataclass(frozen=True)
class Bouquet:
    members: tuple  # sorted column indices
    kind: Kind
    cvec: tuple  # length n, zero outside members

    @property
    def coefficients(self) -> tuple:
        """The nonzero entries c_{i1}, ..., c_{ik} of cvec, in member order."""
        return tuple(self.cvec[j] for j in self.members)


@dataclass(frozen=True)
class BouquetDecomposition:
    matrix: IntMatrix
    bouquets: tuple

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def s(self) -> int:
        return len(self.bouquets)

    @property
    def signature(self) -> frozenset:
        """Indices of the non-mixed bouquets (the ω of a T_ω-robust ideal)."""
        return frozenset(i for i, b in enumerate(self.bouquets) if b.kind is Kind.NONMIXED)

    @property
    def kinds(self) -> tuple:
        return tuple(b.kind for b in self.bouquets)

    def bouquet_of(self, column: int) -> int:
        for i, b in enumerate(self.bouquets):
            if column in b.members:
                return i
        raise IndexError(column)


def _parallel(u, v) -> bool:
    k = len(u)
    return all(u[a] * v[b] == u[b] * v[a] for a in range(k) for b in range(a + 1, k))


@functools.lru_cache(maxsize=None)
def _decompose(A: IntMatrix, free_coeffs: tuple | None) -> BouquetDecomposition:
    require_grading(A)
    n = A.ncols
    gale = gale_transform(A).rows
    free = [j for j in range(n) if not any(gale[j])]
    classes: list = []
    for j in range(n):
        if not any(gale[j]):
            continue
        for cls in classes:
            if _parallel(gale[cls[0]], gale[j]):
                cls.append(j)
                break
        else:
            classes.append([j])

    bouquets = []
    for cls in classes:
        first = gale[cls[0]]
        l = next(t for t, x in enumerate(first) if x)
        g = math.gcd(*(gale[j][l] for j in cls))
        eps = 1 if first[l] > 0 else -1
        cvec = [0] * n
        for j in cls:
            cvec[j] = eps * gale[j][l] // g
        kind = Kind.MIXED if any(cvec[j] < 0 for j in cls) else Kind.NONMIXED
        bouquets.append(Bouquet(tuple(cls), kind, tuple(cvec)))
    if free:
        coeffs = free_coeffs if free_coeffs is not None else (1,) * len(free)
        if len(coeffs) != len(free) or coeffs[0] <= 0 or not all(coeffs):
            raise ToricError("free bouquet coefficients must be nonzero with a positive first entry")
        cvec = [0] * n
        for j, c in zip(free, coeffs):
            cvec[j] = c
        bouquets.append(Bouquet(tuple(free), Kind.FREE, tuple(cvec)))
    bouquets.sort(key=lambda b: b.members[0])
    return BouquetDecomposition(A, tuple(bouquets))


def bouquet_decomposition(A, free_coeffs: Sequence[int] | None = None) -> BouquetDecomposition:
    """Bouquets of A, ordered by smallest member.

    ``free_coeffs`` overrides the cvec entries of the free bouquet (default
    all ones); any nonzero choice with a positive first entry is allowed.
    """
    return _decompose(as_matrix(A), tuple(free_coeffs) if free_coeffs is not None else None)


def bouquet_matrix(A, decomposition: BouquetDecomposition | None = None) -> IntMatrix:
    """The matrix A_B with columns a_{B_i} = sum_j (c_{B_i})_j a_j."""
    A = as_matrix(A)
    dec = decomposition or bouquet_decomposition(A)
    cols = A.columns
    out = []
    for b in dec.bouquets:
        out.append(tuple(sum(b.cvec[j] * cols[j][r] for j in b.members) for r in range(A.nrows)))
    return IntMatrix.from_columns(out)


def is_simple(A) -> bool:
    return all(len(b.members) == 1 for b in bouquet_decomposition(A).bouquets)


@dataclass(frozen=True)
class DMap:
    """The isomorphism D : Ker_Z(A_B) -> Ker_Z(A)."""

    decomposition: BouquetDecomposition
    source: IntMatrix  # A_B

    @classmethod
    def of(cls, A, decomposition: BouquetDecomposition | None = None) -> DMap:
        A = as_matrix(A)
        dec = decomposition or bouquet_decomposition(A)
        return cls(dec, bouquet_matrix(A, dec))

    @property
    def target(self) -> IntMatrix:
        return self.decomposition.matrix

    def forward(self, u, check: bool = True) -> tuple:
        u = tuple(u)
        if len(u) != self.decomposition.s:
            raise ValueError(f"expected {self.decomposition.s} coordinates, got {len(u)}")
        if check and any(self.source @ u):
            raise NotInKernel("vector is not in the kernel of the bouquet matrix")
        out = [0] * self.decomposition.n
        for ui, b in zip(u, self.decomposition.bouquets):
            if ui:
                for j in b.members:
                    out[j] = b.cvec[j] * ui
        return tuple(out)

    def inverse(self, v, check: bool = True) -> tuple:
        v = tuple(v)
        if len(v) != self.decomposition.n:
            raise ValueError(f"expected {self.decomposition.n} coordinates, got {len(v)}")
        if check and any(self.target @ v):
            raise NotInKernel("vector is not in the kernel of the matrix")
        u = []
        for b in self.decomposition.bouquets:
            first = b.members[0]
            q, r = divmod(v[first], b.cvec[first])
            if r or any(v[j] != b.cvec[j] * q for j in b.members):
                raise ToricError("vector is not constant along a bouquet; corrupted input")
            u.append(q)
        return tuple(u)


def d_map(A, u, inverse: bool = False) -> tuple:
    """D(u) for u in Ker_Z(A_B), or D^{-1}(u) for u in Ker_Z(A)."""
    dm = DMap.of(A)
    return dm.inverse(u) if inverse else dm.forward(u)
