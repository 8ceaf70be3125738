"""Compare two Hilbert-basis rules for Graver bases in codimension two.

The cone rule takes ±(H_1 ∪ ... ∪ H_n'), with H_i the Hilbert basis of the
cone between consecutive reduced rays b̃_i.  The chamber rule takes the
Hilbert bases of the cones between consecutive rays of ±b̃.  Both are
checked against the completion algorithm on random instances, along with
the indispensable rule and the circuit criterion.
"""

import argparse
import random
import sys

sys.path.insert(0, __file__.rsplit("/scripts/", 1)[0] + "/tests")

from instances import random_codim2  # noqa: E402
from toricrobust import graver, indispensable_set, is_strongly_robust  # noqa: E402
from toricrobust.bases import BasisSet  # noqa: E402
from toricrobust.codim2 import (  # noqa: E402
    circuit_criterion,
    graver_and_indispensable_codim2,
    hilbert_union,
    reduced_gale_diagram,
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=150)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    tally = {"cone rule": 0, "chamber rule": 0, "indispensable rule": 0, "circuit criterion": 0}
    first_miss = None
    for _ in range(args.count):
        A = random_codim2(rng)
        G = graver(A)
        diag = reduced_gale_diagram(A)
        H = hilbert_union(diag)
        cone = BasisSet.of(diag.kernel_vector(h) for h in H)
        gr, ind = graver_and_indispensable_codim2(A)
        if cone == G:
            tally["cone rule"] += 1
        elif first_miss is None:
            first_miss = (A.rows, sorted(G.as_set() - cone.as_set()))
        tally["chamber rule"] += gr == G
        tally["indispensable rule"] += ind == indispensable_set(A)
        tally["circuit criterion"] += circuit_criterion(A) == is_strongly_robust(A)
    for name, hits in tally.items():
        print(f"{name:20s} {hits}/{args.count}")
    if first_miss:
        print("first cone-rule miss:", first_miss[0], "lacks", first_miss[1])


if __name__ == "__main__":
    main()
