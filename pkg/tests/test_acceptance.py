"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are printed even
without ``-s``).
"""

import contextlib
import itertools
import random
import time

import pytest

import toricrobust
from instances import (
    EXAMPLE_CVECS,
    EXAMPLE_D,
    EXAMPLE_LAMBDAS,
    GRAVER_789,
    S_OMEGA_789,
    T24,
    T789,
    random_codim2,
    random_graded,
    random_robust_pair,
)
from toricrobust import bases, bouquet, codim2, intlin, robustness
from toricrobust.bases import (
    graver,
    indispensable_set,
    is_markov_basis,
    is_strongly_robust,
    minimal_markov,
    universal_markov,
)
from toricrobust.bouquet import DMap, Kind, bouquet_decomposition, bouquet_matrix, is_simple
from toricrobust.cli import main
from toricrobust.codim2 import (
    central_polygon,
    circuit_criterion,
    graver_and_indispensable_codim2,
)
from toricrobust.groebner import reduced_groebner, transport_basis, transport_weight
from toricrobust.intlin import IntMatrix, gale_transform, same_lattice
from toricrobust.oracles import box_fiber, graver_box, s_omega_direct
from toricrobust.robustness import (
    GLMSpec,
    delta_complex,
    generalized_lawrence,
    glm_postconditions,
    lambda_omega,
    s_omega,
)

# simple matrices on which Δ_T is computed across the suite
SIMPLE_TS = [T789, T24, IntMatrix(((1, 2, 3, 4),)), IntMatrix(((2, 3, 5),))]


def subsets(s):
    return [frozenset(c) for r in range(s + 1) for c in itertools.combinations(range(s), r)]


def clear_caches():
    for mod in (bases, bouquet, codim2, intlin, robustness):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, title):
        try:
            yield
        except BaseException as exc:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {title} ({type(exc).__name__}: {exc})")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number}: {title}")
    return run


# ---------------------------------------------------------------------------

def test_criterion_01_graver_golden(criterion):
    with criterion(1, "Graver basis of (7 8 9), 11 elements, under 1 s"):
        clear_caches()
        t0 = time.perf_counter()
        G = graver(T789)
        elapsed = time.perf_counter() - t0
        assert G.as_set() == GRAVER_789
        assert len(G) == 11
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_02_s_omega_tables(criterion):
    with criterion(2, "S_ω((7 8 9)) for all 8 subsets ω"):
        for omega, expected in S_OMEGA_789.items():
            got = s_omega(T789, omega).as_set()
            assert got == expected, f"ω={omega}"
            # second route: the decomposition criterion read directly on T
            assert s_omega_direct(T789, omega, GRAVER_789) == expected, f"ω={omega} (direct)"


def test_criterion_03_delta_golden(criterion, capsys, tmp_path):
    with criterion(3, "Δ_T of the 2x4 T by the Lawrence route and --codim2-fast, under 60 s"):
        expected = {frozenset(), frozenset({1}), frozenset({3}), frozenset({1, 3})}
        clear_caches()
        t0 = time.perf_counter()
        slow = delta_complex(T24, method="lawrence")
        t_slow = time.perf_counter() - t0
        clear_caches()
        t0 = time.perf_counter()
        fast = delta_complex(T24, method="codim2")
        t_fast = time.perf_counter() - t0
        assert slow.faces == expected
        assert fast.faces == expected
        assert t_slow < 60 and t_fast < 60, (t_slow, t_fast)

        path = tmp_path / "t24.mat"
        path.write_text("2 4\n12 9 8 0\n0 3 4 12\n")
        outs = []
        for extra in ([], ["--codim2-fast"]):
            assert main(["delta", str(path), *extra]) == 0
            outs.append([ln for ln in capsys.readouterr().out.splitlines() if not ln.startswith("#")])
        assert outs[0] == outs[1] == ["faces 4", "{}", "{2}", "{4}", "{2,4}", "facets {2,4}"]


def test_criterion_04_lawrence_robustness(criterion):
    with criterion(4, "Λ(T)_ω strongly robust exactly for ω in {2},{4},{2,4} among the listed"):
        for omega in ({1}, {3}, {1, 3}):
            assert is_strongly_robust(lambda_omega(T24, omega)), omega
        for omega in ({0}, {2}):
            assert not is_strongly_robust(lambda_omega(T24, omega)), omega


def test_criterion_05_generalized_lawrence(criterion):
    with criterion(5, "generalized Lawrence matrix of the 2x4 example and the displayed 10x12 D"):
        spec = GLMSpec(T24, EXAMPLE_CVECS, EXAMPLE_LAMBDAS)
        for D in (generalized_lawrence(spec), IntMatrix(EXAMPLE_D)):
            dec = bouquet_decomposition(D)
            assert dec.kinds == (Kind.MIXED, Kind.NONMIXED, Kind.MIXED, Kind.NONMIXED)
            assert tuple(b.coefficients for b in dec.bouquets) == EXAMPLE_CVECS
            AB = bouquet_matrix(D, dec)
            assert same_lattice(gale_transform(AB).basis, gale_transform(T24).basis)
            assert glm_postconditions(spec, D) == []
            assert is_strongly_robust(D)
        assert generalized_lawrence(spec).rows == EXAMPLE_D


def test_criterion_06_graver_oracle(criterion):
    with criterion(6, "Graver completion equals the box oracle on random matrices"):
        rng = random.Random(2024)
        done = 0
        ranks = set()
        while done < 24:
            n = rng.randint(3, 5)
            m = rng.randint(max(1, n - 3), n - 1)
            A = random_graded(rng, m, n, -5, 5, budget=60000)
            if A is None:
                continue
            k = gale_transform(A).k
            assert k <= 3
            ranks.add(k)
            assert graver(A).as_set() == graver_box(A), A.rows
            done += 1
        assert ranks >= {1, 2}, ranks


def markov_test_matrices():
    rng = random.Random(7)
    mats = [T789, T24, lambda_omega(T24, {1, 3}), lambda_omega(T789, {0})]
    while len(mats) < 10:
        n = rng.randint(3, 5)
        A = random_graded(rng, rng.randint(1, n - 1), n, 0, 5)
        if A is not None:
            mats.append(A)
    return mats


def fiber_connected(A, moves, x, cert):
    verts = set(box_fiber(A, A @ x, cert))
    assert x in verts
    steps = [m for mv in moves for m in (mv, tuple(-a for a in mv))]
    seen, stack = {x}, [x]
    while stack:
        p = stack.pop()
        for m in steps:
            q = tuple(a + b for a, b in zip(p, m))
            if q in verts and q not in seen:
                seen.add(q)
                stack.append(q)
    return seen == verts


def test_criterion_07_markov_validity(criterion):
    with criterion(7, "50 random fibers connected by minimal Markov moves, and the sandwich"):
        rng = random.Random(11)
        for A in markov_test_matrices():
            cert = intlin.require_grading(A)
            M = minimal_markov(A)
            for _ in range(50):
                x = tuple(rng.randint(0, 3) for _ in range(A.ncols))
                assert fiber_connected(A, list(M), x, cert), (A.rows, x)
            ind, uni, gr = indispensable_set(A).as_set(), universal_markov(A).as_set(), graver(A).as_set()
            assert ind <= M.as_set() <= uni <= gr, A.rows


def test_criterion_08_correspondences(criterion):
    with criterion(8, "Markov and Gröbner correspondences on T_ω-robust pairs"):
        rng = random.Random(5)
        pairs = 0
        for T in (T24, T789, T24, T789, T24, T789):
            omega = frozenset(i for i in range(T.ncols) if rng.random() < 0.5)
            A1, A2 = random_robust_pair(rng, T, omega)
            m1, m2 = DMap.of(A1), DMap.of(A2)
            moved = [m2.forward(m1.inverse(u)) for u in minimal_markov(A1)]
            assert is_markov_basis(A2, moved)
            assert len(set(moved)) == len(minimal_markov(A1)) == len(minimal_markov(A2))
            assert {m2.forward(m1.inverse(u)) for u in indispensable_set(A1)} == indispensable_set(A2).as_set()
            for _ in range(3):
                w = [rng.randint(1, 9) for _ in range(A1.ncols)]
                gb1 = reduced_groebner(A1, w)
                gb2 = reduced_groebner(A2, transport_weight(w, A1, A2))
                assert transport_basis(gb1, A1, A2) == gb2
            pairs += 1
        assert pairs >= 5


def test_criterion_09_monotonicity(criterion):
    with criterion(9, "S_ω1(T) ⊇ S_ω2(T) along every chain ω1 ⊂ ω2"):
        for T, expected_pairs in ((T789, 19), (T24, 65)):
            sets = {w: s_omega(T, w).as_set() for w in subsets(T.ncols)}
            chains = [(a, b) for a in sets for b in sets if a < b]
            assert len(chains) == expected_pairs
            for a, b in chains:
                assert sets[a] >= sets[b], (T.rows, a, b)


def test_criterion_10_codim2(criterion):
    with criterion(10, "codimension-2 Hilbert basis rules, circuit criterion, polygon bound"):
        rng = random.Random(31)
        instances = [T24, IntMatrix(((1, 3, 6),))]
        while len(instances) < 14:
            instances.append(random_codim2(rng))
        simple = 0
        for A in instances:
            gr, ind = graver_and_indispensable_codim2(A)
            assert gr == graver(A), A.rows
            assert ind == indispensable_set(A), A.rows
            assert circuit_criterion(A) == is_strongly_robust(A), A.rows
            if is_simple(A):
                simple += 1
                poly = central_polygon(A)
                non_vertex = {i for i in range(A.ncols) if not poly.is_vertex[i]}
                assert delta_complex(A, method="lawrence").vertices <= non_vertex, A.rows
        assert simple >= 3, simple


def test_criterion_11_never_void(criterion):
    with criterion(11, "the empty set is a face of Δ_T for every tested simple T"):
        rng = random.Random(3)
        Ts = list(SIMPLE_TS)
        while len(Ts) < 10:
            T = random_codim2(rng)
            if is_simple(T):
                Ts.append(T)
        for T in Ts:
            assert frozenset() in delta_complex(T).faces, T.rows
            assert is_strongly_robust(lambda_omega(T, ()))
