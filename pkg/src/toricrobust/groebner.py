"""Reduced Gröbner bases of toric ideals under weight orders.

A binomial x^p - x^q is kept as the exponent pair (p, q) with x^p the
leading monomial.  Orders compare w·p first and break ties
lexicographically (x_1 > x_2 > ... > x_n).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bases import minimal_markov
from .bouquet import DMap, bouquet_decomposition, bouquet_matrix
from .errors import ToricError
from .intlin import (
    as_matrix,
    dot,
    gale_transform,
    neg_part,
    pos_part,
    require_grading,
    same_lattice,
)


@dataclass(frozen=True)
class WeightOrder:
    """Weight vector (non-negative rationals) refined by lex order."""

    weights: tuple

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", w)

    @property
    def integer_weights(self) -> tuple:
        den = math.lcm(*(x.denominator for x in self.weights)) if self.weights else 1
        return tuple(int(x * den) for x in self.weights)

    def key(self, p) -> tuple:
        return (dot(self.integer_weights, p), tuple(p))

    def leading_sign(self, u) -> int:
        """+1 if x^{u+} is the larger monomial, -1 otherwise."""
        return 1 if self.key(pos_part(u)) > self.key(neg_part(u)) else -1


@dataclass(frozen=True)
class MarkedBinomial:
    vector: tuple  # oriented so that vector⁺ is the leading exponent

    @classmethod
    def from_pair(cls, lead, trail) -> MarkedBinomial:
        return cls(tuple(a - b for a, b in zip(lead, trail)))

    @property
    def lead(self) -> tuple:
        return pos_part(self.vector)

    @property
    def trail(self) -> tuple:
        return neg_part(self.vector)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Reducer:
    def __init__(self, order: WeightOrder):
        self.order = order
        self.elems: list = []  # (lead, trail)

    def normal_form(self, p, skip=None):
        p = tuple(p)
        while True:
            for idx, (lead, trail) in enumerate(self.elems):
                if idx != skip and _divides(lead, p):
                    p = tuple(x - a + b for x, a, b in zip(p, lead, trail))
                    break
            else:
                return p


def reduced_groebner(A, order: WeightOrder | Sequence) -> tuple:
    """The reduced Gröbner basis of I_A, as sorted MarkedBinomials.

    Buchberger's algorithm on binomials starting from a minimal Markov
    basis; S-pairs are processed in increasing degree of their lcm.
    """
    A = as_matrix(A)
    if not isinstance(order, WeightOrder):
        order = WeightOrder(tuple(order))
    if len(order.weights) != A.ncols:
        raise ValueError("weight vector has wrong length")
    cert = require_grading(A)
    grade = cert.integer_weights(A)
    red = _Reducer(order)

    def orient(p, q):
        return (p, q) if order.key(p) > order.key(q) else (q, p)

    pairs: list = []

    def add(elem):
        i = len(red.elems)
        red.elems.append(elem)
        for j in range(i):
            a, c = elem[0], red.elems[j][0]
            if not any(x and y for x, y in zip(a, c)):
                continue  # coprime leading terms
            lcm = tuple(max(x, y) for x, y in zip(a, c))
            heapq.heappush(pairs, (dot(grade, lcm), j, i))

    for u in minimal_markov(A):
        p, q = red.normal_form(pos_part(u)), red.normal_form(neg_part(u))
        if p != q:
            add(orient(p, q))
    while pairs:
        _, j, i = heapq.heappop(pairs)
        (a, b), (c, d) = red.elems[j], red.elems[i]
        lcm = tuple(max(x, y) for x, y in zip(a, c))
        s1 = tuple(l - x + y for l, x, y in zip(lcm, a, b))
        s2 = tuple(l - x + y for l, x, y in zip(lcm, c, d))
        p, q = red.normal_form(s1), red.normal_form(s2)
        if p != q:
            add(orient(p, q))

    # minimize, then reduce trailing terms
    elems = sorted(set(red.elems), key=lambda e: order.key(e[0]))
    minimal = []
    for lead, trail in elems:
        if not any(_divides(l2, lead) for l2, _ in minimal):
            minimal.append((lead, trail))
    red.elems = minimal
    out = []
    for idx, (lead, trail) in enumerate(minimal):
        t = red.normal_form(trail, skip=idx)
        if any(x and y for x, y in zip(lead, t)):
            raise ArithmeticError("reduced basis element with a monomial factor")
        out.append(MarkedBinomial.from_pair(lead, t))
    return tuple(sorted(out, key=lambda m: m.vector))


@dataclass(frozen=True)
class MixedProfile:
    """Per-bouquet data used when transporting a weight vector."""

    r_plus: tuple
    r_minus: tuple
    cplus_dot_w: tuple
    cminus_dot_w: tuple


def mixed_profile(A1, A2, w) -> MixedProfile:
    d1, d2 = bouquet_decomposition(A1), bouquet_decomposition(A2)
    w = tuple(Fraction(x) for x in w)
    rp, rm, cp, cm = [], [], [], []
    for b1, b2 in zip(d1.bouquets, d2.bouquets):
        rp.append(sum(1 for j in b2.members if b2.cvec[j] > 0))
        rm.append(sum(1 for j in b2.members if b2.cvec[j] < 0))
        cp.append(sum(b1.cvec[j] * w[j] for j in b1.members if b1.cvec[j] > 0))
        cm.append(sum(-b1.cvec[j] * w[j] for j in b1.members if b1.cvec[j] < 0))
    return MixedProfile(tuple(rp), tuple(rm), tuple(cp), tuple(cm))


def check_same_type(A1, A2) -> None:
    """Raise unless A1 and A2 share bouquet ideal and bouquet signs."""
    d1, d2 = bouquet_decomposition(A1), bouquet_decomposition(A2)
    if d1.s != d2.s or d1.kinds != d2.kinds:
        raise ToricError("bouquet structures differ")
    k1 = gale_transform(bouquet_matrix(A1, d1)).basis
    k2 = gale_transform(bouquet_matrix(A2, d2)).basis
    if not same_lattice(k1, k2):
        raise ToricError("bouquet ideals differ")


def transport_weight(order: WeightOrder | Sequence, A1, A2) -> WeightOrder:
    """Weight w' on the columns of A2 with w'·D2(u) = w·D1(u) on Ker(T)."""
    A1, A2 = as_matrix(A1), as_matrix(A2)
    w = order.weights if isinstance(order, WeightOrder) else tuple(Fraction(x) for x in order)
    if len(w) != A1.ncols:
        raise ValueError("weight vector has wrong length")
    check_same_type(A1, A2)
    prof = mixed_profile(A1, A2, w)
    d2 = bouquet_decomposition(A2)
    out = [Fraction(0)] * A2.ncols
    for i, b in enumerate(d2.bouquets):
        for j in b.members:
            c = b.cvec[j]
            if c > 0:
                out[j] = prof.cplus_dot_w[i] / (c * prof.r_plus[i])
            else:
                out[j] = prof.cminus_dot_w[i] / (-c * prof.r_minus[i])
    return WeightOrder(tuple(out))


def transport_basis(basis, A1, A2) -> tuple:
    """Image of marked binomials of A1 under D2 ∘ D1⁻¹, orientation kept."""
    m1, m2 = DMap.of(A1), DMap.of(A2)
    out = [MarkedBinomial(m2.forward(m1.inverse(g.vector))) for g in basis]
    return tuple(sorted(out, key=lambda m: m.vector))
