"""Exact toolkit for bouquets, toric bases and strong robustness of toric ideals."""

from .bases import (
    BasisSet,
    circuits,
    graver,
    has_semiconformal_decomposition,
    indispensable_set,
    is_markov_basis,
    is_strongly_robust,
    minimal_markov,
    universal_markov,
)
from .bouquet import Bouquet, BouquetDecomposition, DMap, Kind, bouquet_decomposition, bouquet_matrix, d_map, is_simple
from .codim2 import (
    central_polygon,
    circuits_codim2,
    graver_and_indispensable_codim2,
    hilbert_basis_2d,
    is_strongly_robust_codim2,
    reduced_gale_diagram,
)
from .errors import CodimensionError, MatrixFormatError, NotInKernel, NotPositivelyGraded, NotSimple, ToricError
from .groebner import MarkedBinomial, WeightOrder, reduced_groebner, transport_basis, transport_weight
from .intlin import (
    GaleTransform,
    GradingCertificate,
    IntMatrix,
    fiber_enumerate,
    gale_transform,
    grading_certificate,
    primitive_part,
)
from .robustness import (
    GLMSpec,
    SimplicialComplex,
    delta_complex,
    generalized_lawrence,
    glm_postconditions,
    lambda_omega,
    s_omega,
)

__version__ = "0.1.0"
