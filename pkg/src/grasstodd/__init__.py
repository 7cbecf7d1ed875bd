"""Exact Schubert calculus on Grassmannians and Roberts-ring verdicts.

The Chow ring of G_d(n) on its Schubert basis, Chern/Todd classes of the
tautological and tangent bundles, reduction modulo the hyperplane class,
the Roberts-ring classification of the cones over Pluecker embeddings, and
the matching classification of Pfaffian rings. All arithmetic is exact.
"""

from .bundles import (
    BundleCharacter,
    BundleChern,
    ch_Q,
    ch_S,
    ch_S_dual,
    ch_tangent,
    chern_Q,
    chern_S_inverse_series,
    chern_tangent,
    todd_tangent,
)
from .chow import (
    ChowElement,
    HMatrixSet,
    NonHomogeneousError,
    ShapeMismatchError,
    add,
    build_h_matrices,
    from_terms,
    giambelli_expand,
    graded_context,
    lr_coefficient,
    multiply,
    pieri,
    reduce_mod_h,
    scale,
    schubert,
    sigma,
    unit,
    zero,
)
from .cone import (
    ConeChowDims,
    RobertsReport,
    TableEntry,
    TauRecord,
    cone_chow_dims,
    gorenstein_parity_check,
    roberts_verdict,
    tau_components,
    verdict_table,
)
from .partitions import (
    GrassmannShape,
    Partition,
    conjugate,
    enumerate_box,
    fits_box,
    normalize_partition,
    plucker_relation_count,
    ssyt_count,
)
from .pfaffian import (
    AntisymmetricMatrix,
    PfaffianClassification,
    classify_B,
    cross_check_B2,
    determinant,
    pfaffian,
)
from .series import (
    GradedContext,
    PolynomialAlgebra,
    ToddLogCoeffs,
    bernoulli,
    elementary_from_power_sums,
    exp_graded,
    log_graded,
    power_sums_from_elementary,
    todd_log_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "AntisymmetricMatrix",
    "BundleCharacter",
    "BundleChern",
    "ChowElement",
    "ConeChowDims",
    "GradedContext",
    "GrassmannShape",
    "HMatrixSet",
    "NonHomogeneousError",
    "Partition",
    "PfaffianClassification",
    "PolynomialAlgebra",
    "RobertsReport",
    "ShapeMismatchError",
    "TableEntry",
    "TauRecord",
    "ToddLogCoeffs",
    "add",
    "bernoulli",
    "build_h_matrices",
    "ch_Q",
    "ch_S",
    "ch_S_dual",
    "ch_tangent",
    "chern_Q",
    "chern_S_inverse_series",
    "chern_tangent",
    "classify_B",
    "cone_chow_dims",
    "conjugate",
    "cross_check_B2",
    "determinant",
    "elementary_from_power_sums",
    "enumerate_box",
    "exp_graded",
    "fits_box",
    "from_terms",
    "giambelli_expand",
    "gorenstein_parity_check",
    "graded_context",
    "log_graded",
    "lr_coefficient",
    "multiply",
    "normalize_partition",
    "pfaffian",
    "pieri",
    "plucker_relation_count",
    "power_sums_from_elementary",
    "reduce_mod_h",
    "roberts_verdict",
    "scale",
    "schubert",
    "sigma",
    "ssyt_count",
    "tau_components",
    "todd_log_coeffs",
    "todd_tangent",
    "unit",
    "verdict_table",
    "zero",
]
