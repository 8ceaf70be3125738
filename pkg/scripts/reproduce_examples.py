"""Print the worked examples: Graver basis and S_ω tables of (7 8 9),
Δ_T of the 2x4 matrix, and the generalized Lawrence matrix built on it."""

import itertools

from toricrobust import (
    GLMSpec,
    IntMatrix,
    delta_complex,
    generalized_lawrence,
    glm_postconditions,
    graver,
    is_strongly_robust,
    lambda_omega,
    s_omega,
)


def one_based(omega):
    return "{" + ",".join(str(i + 1) for i in sorted(omega)) + "}"


def main():
    T1 = IntMatrix(((7, 8, 9),))
    print("Graver basis of (7 8 9):")
    for g in graver(T1):
        print("  ", g)
    print()
    for r in range(4):
        for omega in itertools.combinations(range(3), r):
            S = s_omega(T1, omega)
            print(f"S_{one_based(omega)}: {len(S)} elements")
            for u in S:
                print("  ", u)
    print()

    T2 = IntMatrix(((12, 9, 8, 0), (0, 3, 4, 12)))
    for r in range(3):
        for omega in itertools.combinations(range(4), r):
            print(f"Λ(T)_{one_based(omega)} strongly robust: {is_strongly_robust(lambda_omega(T2, omega))}")
    cx = delta_complex(T2)
    print("Δ_T faces:", " ".join(one_based(f) for f in cx.sorted_faces()))
    print()

    spec = GLMSpec(T2, ((1, -1), (5, 6, 7, 8), (2023, -2022, 11), (13, 14, 15)),
                   ((1, 0), (-1, 1, 0, 0), (1, 1, 0), (0, -1, 1)))
    D = generalized_lawrence(spec)
    print("generalized Lawrence matrix:")
    for row in D.rows:
        print("  " + " ".join(f"{x:5d}" for x in row))
    print("postconditions:", glm_postconditions(spec, D) or "ok")
    print("strongly robust:", is_strongly_robust(D))


if __name__ == "__main__":
    main()
