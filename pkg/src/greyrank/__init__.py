"""Interval-valued multi-attribute decision making.

Plans scored by interval numbers are normalized, weighted by fused
subjective/objective interval weights, ranked by three grey relation
methods (interval TOPSIS, incidence approach degree, max-entropy
comprehensive incidence) and fused into a final order by a weighted
Borda count.
"""

from .errors import ComputationError, GreyRankError, ValidationError
from .estimator import GreyIntervalNormalizer, GreyRelationRanker
from .interval import GreyInterval, distance
from .normalize import normalize, normalize_cost_column, normalize_effect_column
from .pipeline import Report, WhatIfResult, run, whatif
from .problem import (
    Attribute,
    AttributeKind,
    DecisionProblem,
    MethodParams,
    load_problem,
)
from .ranking import (
    IdealVectors,
    IncidenceMatrices,
    Method,
    RankingResult,
    blend_preference,
    entropy_incidence_scores,
    ideal_vectors,
    incidence_coefficients,
    incidence_degrees,
    incidence_scores,
    max_entropy_weights,
    scores_to_ranks,
    topsis_scores,
    weighted_borda,
    weighted_matrix,
)
from .weighting import (
    WeightSet,
    ahp_eigenvector,
    column_deviations,
    comprehensive_objective,
    compute_weights,
    entropy_weights,
    final_weights,
    objective_weights_opt,
    subjective_weights,
)

__version__ = "0.1.0"

__all__ = [
    "Attribute",
    "AttributeKind",
    "ComputationError",
    "DecisionProblem",
    "GreyInterval",
    "GreyIntervalNormalizer",
    "GreyRankError",
    "GreyRelationRanker",
    "IdealVectors",
    "IncidenceMatrices",
    "Method",
    "MethodParams",
    "RankingResult",
    "Report",
    "ValidationError",
    "WeightSet",
    "WhatIfResult",
    "ahp_eigenvector",
    "blend_preference",
    "column_deviations",
    "comprehensive_objective",
    "compute_weights",
    "distance",
    "entropy_incidence_scores",
    "entropy_weights",
    "final_weights",
    "ideal_vectors",
    "incidence_coefficients",
    "incidence_degrees",
    "incidence_scores",
    "load_problem",
    "max_entropy_weights",
    "normalize",
    "normalize_cost_column",
    "normalize_effect_column",
    "objective_weights_opt",
    "run",
    "scores_to_ranks",
    "subjective_weights",
    "topsis_scores",
    "weighted_borda",
    "weighted_matrix",
    "whatif",
]
