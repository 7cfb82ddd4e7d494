"""Exact polynomial algebra: constraint systems, resultant elimination,
factorization, solubility certificates, and the numeric chain solver."""

from .embeddings import (
    DEFAULT_TOLERANCE,
    Embedding,
    construction_order,
    max_residual,
    qs_solve,
    verify_embedding,
)
from .multipoly import MultiPoly, as_fraction, resultant, sylvester_matrix
from .solubility import (
    CycleTypeReport,
    SolubilityCertificate,
    SolubilityVerdict,
    cycle_type,
    frobenius_cycle_types,
    maximal_soluble_transitive_groups,
    nonsolubility_certificate,
    rules_for_degree,
    soluble_cycle_types,
)
from .systems import (
    K33_EDGE_PARAMETERS,
    K33_SPECIAL_DISTANCES,
    ConstraintSystem,
    EliminationResult,
    ExactRational,
    build_constraint_system,
    distance_assignment,
    eliminate_to_x3,
    k33_graph,
    k33_system,
    planted_k33_distances,
    square_eliminate_y,
    x1_branch_report,
)
from .unipoly import (
    UniPoly,
    degree_multiset_mod,
    factor_over_q,
    is_irreducible,
    poly_gcd,
    primes_up_to,
    squarefree_decomposition,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "Embedding",
    "construction_order",
    "max_residual",
    "qs_solve",
    "verify_embedding",
    "MultiPoly",
    "as_fraction",
    "resultant",
    "sylvester_matrix",
    "CycleTypeReport",
    "SolubilityCertificate",
    "SolubilityVerdict",
    "cycle_type",
    "frobenius_cycle_types",
    "maximal_soluble_transitive_groups",
    "nonsolubility_certificate",
    "rules_for_degree",
    "soluble_cycle_types",
    "K33_EDGE_PARAMETERS",
    "K33_SPECIAL_DISTANCES",
    "ConstraintSystem",
    "EliminationResult",
    "ExactRational",
    "build_constraint_system",
    "distance_assignment",
    "eliminate_to_x3",
    "k33_graph",
    "k33_system",
    "planted_k33_distances",
    "square_eliminate_y",
    "x1_branch_report",
    "UniPoly",
    "degree_multiset_mod",
    "factor_over_q",
    "is_irreducible",
    "poly_gcd",
    "primes_up_to",
    "squarefree_decomposition",
]
