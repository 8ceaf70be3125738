"""Fixed and random matrices shared by the test modules."""

import random

from toricrobust.intlin import IntMatrix, gale_transform, grading_certificate
from toricrobust.oracles import box_size, graver_box_bound

T789 = IntMatrix(((7, 8, 9),))
T24 = IntMatrix(((12, 9, 8, 0), (0, 3, 4, 12)))
# the Gale transform written out for T24 in the literature example
B24 = ((2, 3), (0, -4), (-3, 0), (1, 1))

GRAVER_789 = {
    (1, -2, 1), (5, -1, -3), (4, 1, -4), (0, 9, -8), (1, 7, -7), (2, 5, -6),
    (3, 3, -5), (9, 0, -7), (6, -3, -2), (8, -7, 0), (7, -5, -1),
}

# T_ω-indispensable sets of (7 8 9), keyed by 0-based ω
S_OMEGA_789 = {
    (): GRAVER_789,
    (0,): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (9, 0, -7), (6, -3, -2), (7, -5, -1), (8, -7, 0)},
    (1,): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (0, 9, -8), (1, 7, -7), (2, 5, -6), (3, 3, -5),
           (6, -3, -2), (7, -5, -1), (8, -7, 0)},
    (2,): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (0, 9, -8), (1, 7, -7), (2, 5, -6), (3, 3, -5),
           (9, 0, -7)},
    (0, 1): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (6, -3, -2), (7, -5, -1), (8, -7, 0)},
    (0, 2): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (9, 0, -7)},
    (1, 2): {(1, -2, 1), (5, -1, -3), (4, 1, -4), (0, 9, -8), (1, 7, -7), (2, 5, -6), (3, 3, -5)},
    (0, 1, 2): {(1, -2, 1), (5, -1, -3), (4, 1, -4)},
}

EXAMPLE_CVECS = ((1, -1), (5, 6, 7, 8), (2023, -2022, 11), (13, 14, 15))
EXAMPLE_LAMBDAS = ((1, 0), (-1, 1, 0, 0), (1, 1, 0), (0, -1, 1))
EXAMPLE_D = (
    (12, 0, -9, 9, 0, 0, 8, 8, 0, 0, 0, 0),
    (0, 0, -3, 3, 0, 0, 4, 4, 0, 0, -12, 12),
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -6, 5, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -7, 0, 5, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -8, 0, 0, 5, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 2022, 2023, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -11, 0, 2023, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, -14, 13, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, -15, 0, 13),
)


def random_graded(rng: random.Random, m: int, n: int, lo: int = -5, hi: int = 5, budget=None):
    """A random m x n matrix with entries in [lo, hi] that is positively graded.

    With ``budget`` set, also require the Graver box oracle to visit at most
    that many candidates.  Returns None after too many failed draws.
    """
    for _ in range(200):
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
        A = IntMatrix(tuple(tuple(r) for r in rows))
        if any(not any(c) for c in A.columns):
            continue
        if grading_certificate(A) is None or gale_transform(A).k == 0:
            continue
        if budget is not None:
            K = graver_box_bound(A)
            if box_size(A, [-K] * n, [K] * n) > budget:
                continue
        return A
    return None


def random_codim2(rng: random.Random, budget: int = 4000):
    """A random positively graded matrix whose kernel has rank 2."""
    while True:
        n = rng.randint(3, 5)
        A = random_graded(rng, n - 2, n, 0 if rng.random() < 0.5 else -3, 6)
        if A is not None and gale_transform(A).k == 2:
            return A


def random_cvec(rng: random.Random, mixed: bool, max_len: int = 3, top: int = 4) -> tuple:
    """A primitive c-vector with positive first entry; mixed ones have both signs."""
    import math
    while True:
        k = rng.randint(2 if mixed else 1, max_len)
        c = [rng.randint(1, top)] + [rng.choice([-1, 1]) * rng.randint(1, top) if mixed else rng.randint(1, top)
                                    for _ in range(k - 1)]
        if mixed and not any(x < 0 for x in c):
            continue
        if math.gcd(*c) == 1:
            return tuple(c)


def random_robust_pair(rng: random.Random, T, omega):
    """(Λ(T)_ω, a generalized Lawrence matrix with the same T and ω)."""
    from toricrobust.robustness import GLMSpec, generalized_lawrence, lambda_omega
    cvecs = [random_cvec(rng, i not in omega) for i in range(T.ncols)]
    return lambda_omega(T, omega), generalized_lawrence(GLMSpec.from_cvecs(T, cvecs))
