import itertools
import random

import pytest

import toricrobust.robustness as rob
from instances import (
    EXAMPLE_CVECS,
    EXAMPLE_D,
    EXAMPLE_LAMBDAS,
    S_OMEGA_789,
    T24,
    T789,
    random_cvec,
    random_robust_pair,
)
from toricrobust.bases import graver, indispensable_set, is_markov_basis, is_strongly_robust, minimal_markov
from toricrobust.bouquet import DMap, Kind, bouquet_decomposition
from toricrobust.errors import NotSimple, ToricError
from toricrobust.intlin import IntMatrix
from toricrobust.oracles import s_omega_direct
from toricrobust.robustness import (
    GLMSpec,
    SimplicialComplex,
    delta_complex,
    generalized_lawrence,
    glm_postconditions,
    lambda_omega,
    s_omega,
)


def subsets(s):
    return [frozenset(c) for r in range(s + 1) for c in itertools.combinations(range(s), r)]


# ------------------------------------------------------------- Λ(T)_ω

def test_lambda_omega_displays():
    assert lambda_omega(T24, {1, 3}).rows == (
        (12, 9, 8, 0, 0, 0),
        (0, 3, 4, 12, 0, 0),
        (1, 0, 0, 0, 1, 0),
        (0, 0, 1, 0, 0, 1),
    )
    L = lambda_omega(T24)
    assert L.shape == (6, 8)
    assert L.rows[3] == (0, 1, 0, 0, 0, 1, 0, 0)
    assert lambda_omega(T24, range(4)) == T24


def test_lambda_omega_range():
    with pytest.raises(ToricError):
        lambda_omega(T24, {4})


# --------------------------------------------------------------- S_ω(T)

@pytest.mark.parametrize("omega", sorted(S_OMEGA_789))
def test_s_omega_789_tables(omega):
    assert s_omega(T789, omega).as_set() == S_OMEGA_789[omega]


@pytest.mark.parametrize("omega", subsets(4), ids=str)
def test_s_omega_matches_direct_criterion(omega):
    assert s_omega(T24, omega).as_set() == s_omega_direct(T24, omega, graver(T24))


def test_s_omega_empty_is_graver():
    assert s_omega(T24, ()) == graver(T24)


def test_s_omega_requires_simple():
    with pytest.raises(NotSimple):
        s_omega(lambda_omega(T24, {0}), ())


def test_s_omega_ignores_free_bouquet_coefficients():
    T = IntMatrix(((7, 8, 9, 0), (0, 0, 0, 1)))  # column 4 is free
    for omega in ({0}, {0, 2}, {1}):
        A = lambda_omega(T, omega)
        S = indispensable_set(A)
        alt = DMap.of(A, bouquet_decomposition(A, free_coeffs=(2, -3)))
        assert alt.decomposition.bouquets[-1].kind is Kind.FREE
        via_alt = {u for u in graver(T) if alt.forward(u) in S}
        assert via_alt == s_omega(T, omega).as_set()


@pytest.mark.parametrize("T", [T789, T24], ids=["789", "T24"])
def test_monotone_along_chains(T):
    sets = {w: s_omega(T, w).as_set() for w in subsets(T.ncols)}
    for a in sets:
        for b in sets:
            if a < b:
                assert sets[a] >= sets[b]


# ---------------------------------------------------------------- Δ_T

def test_delta_examples():
    cx = delta_complex(T24)
    assert cx.faces == {frozenset(), frozenset({1}), frozenset({3}), frozenset({1, 3})}
    assert cx.facets == (frozenset({1, 3}),)
    assert delta_complex(T789).faces == {frozenset()}


def test_delta_pruning(monkeypatch):
    calls = []
    real = rob.is_face

    def spy(T, omega, method="lawrence"):
        calls.append(frozenset(omega))
        return real(T, omega, method)

    monkeypatch.setattr(rob, "is_face", spy)
    delta_complex(T24)
    assert not any(0 in c and len(c) > 1 for c in calls)
    assert calls[0] == frozenset()


def test_delta_is_a_complex():
    for T in (T24, T789, IntMatrix(((1, 2, 3, 4),))):
        cx = delta_complex(T)
        assert frozenset() in cx
        assert cx.is_downward_closed()


def test_simplicial_complex_helpers():
    cx = SimplicialComplex(3, frozenset({frozenset(), frozenset({0}), frozenset({2}), frozenset({0, 2})}))
    assert cx.vertices == {0, 2}
    assert cx.dimension == 1
    assert cx.sorted_faces() == [(), (0,), (2,), (0, 2)]


def test_face_theorem_on_constructed_matrices():
    rng = random.Random(8)
    faces = delta_complex(T24).faces
    for omega in subsets(4):
        cvecs = [random_cvec(rng, i not in omega) for i in range(4)]
        D = generalized_lawrence(GLMSpec.from_cvecs(T24, cvecs))
        assert bouquet_decomposition(D).signature == omega
        assert is_strongly_robust(D) == (omega in faces)


@pytest.mark.parametrize("seed", range(5))
def test_markov_correspondence(seed):
    rng = random.Random(seed)
    T = [T24, T789][seed % 2]
    omega = frozenset(i for i in range(T.ncols) if rng.random() < 0.5)
    A1, A2 = random_robust_pair(rng, T, omega)
    m1, m2 = DMap.of(A1), DMap.of(A2)
    moved = [m2.forward(m1.inverse(u)) for u in minimal_markov(A1)]
    assert is_markov_basis(A2, moved)
    assert len(moved) == len(minimal_markov(A2))
    assert {m2.forward(m1.inverse(u)) for u in indispensable_set(A1)} == indispensable_set(A2).as_set()


# ------------------------------------------------- generalized Lawrence

def test_generalized_lawrence_reproduces_display():
    spec = GLMSpec(T24, EXAMPLE_CVECS, EXAMPLE_LAMBDAS)
    D = generalized_lawrence(spec)
    assert D.rows == EXAMPLE_D
    assert glm_postconditions(spec) == []
    assert spec.omega == {1, 3}


def test_generalized_lawrence_identity_case():
    spec = GLMSpec.from_cvecs(T24, [(1,)] * 4)
    assert generalized_lawrence(spec) == T24


@pytest.mark.parametrize("seed", range(8))
def test_generalized_lawrence_postconditions(seed):
    rng = random.Random(seed)
    T = [T24, T789][seed % 2]
    omega = frozenset(i for i in range(T.ncols) if rng.random() < 0.5)
    spec = GLMSpec.from_cvecs(T, [random_cvec(rng, i not in omega) for i in range(T.ncols)])
    D = generalized_lawrence(spec)
    assert glm_postconditions(spec, D) == []
    dec = bouquet_decomposition(D)
    assert dec.signature == omega
    assert tuple(b.coefficients for b in dec.bouquets) == spec.cvecs


def test_glm_spec_validation():
    with pytest.raises(ToricError):
        GLMSpec(T24, EXAMPLE_CVECS, ((1, 1),) + EXAMPLE_LAMBDAS[1:])
    with pytest.raises(ToricError):
        GLMSpec(T24, ((-1, 1),) + EXAMPLE_CVECS[1:], EXAMPLE_LAMBDAS)
    with pytest.raises(ToricError):
        GLMSpec.from_cvecs(T24, [(2, 4)] + list(EXAMPLE_CVECS[1:]))


def test_postconditions_catch_a_wrong_matrix():
    spec = GLMSpec(T24, EXAMPLE_CVECS, EXAMPLE_LAMBDAS)
    bad = [list(r) for r in EXAMPLE_D]
    bad[6][7] = 2022  # second row of L_3 now encodes c_3 = (2022, -2022, ...)
    assert glm_postconditions(spec, IntMatrix(tuple(tuple(r) for r in bad)))
