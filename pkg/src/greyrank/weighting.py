"""Attribute weighting: subjective envelopes, two objective schemes and
their multiplicative fusion into interval weights.

Subjective weights are the componentwise min/max envelope of per-expert
crisp weight vectors.  Objective weights come from two independent
schemes: one proportional to the total pairwise interval distance per
column (the maximizer of total deviation over the non-negative unit
sphere), one from the entropy of each bound matrix.  Their envelope is
combined with the subjective envelope by componentwise interval product
and an outer-bound interval normalization.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ComputationError, ValidationError
from .interval import GreyInterval, distance
from .problem import DecisionProblem, check_weight_vector

# Saaty random consistency index, by matrix order.
RANDOM_INDEX = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49,
}

CONSISTENCY_THRESHOLD = 0.1


def subjective_weights(expert_weights: list[list[float]]) -> list[GreyInterval]:
    """Componentwise min/max envelope of the experts' weight vectors.

    Every expert vector must be non-negative and sum to 1; ragged rows
    are rejected.  The envelope contains each expert's vector.
    """
    if not expert_weights:
        raise ValidationError("at least one expert weight vector required")
    m = len(expert_weights[0])
    for l, vec in enumerate(expert_weights, start=1):
        check_weight_vector(vec, m, name=f"expert_weights[{l}]")
    return [
        GreyInterval(min(vec[j] for vec in expert_weights),
                     max(vec[j] for vec in expert_weights))
        for j in range(m)
    ]


def ahp_eigenvector(
    pairwise, tol: float = 1e-10, max_iter: int = 1000
) -> tuple[np.ndarray, float]:
    """Principal eigenvector of a positive reciprocal comparison matrix.

    Power iteration with normalized iterates; returns the weight vector
    and the consistency ratio CR = CI / RI.  A warning is emitted when
    CR exceeds 0.1 (the usual acceptability threshold).

    Parameters
    ----------
    pairwise : array-like, shape (m, m)
        Positive entries with p[i, i] = 1 and p[j, i] = 1 / p[i, j].
    tol : float
        Max-norm convergence tolerance on successive iterates.
    max_iter : int
        Iteration budget; exceeding it raises ComputationError.
    """
    P = np.asarray(pairwise, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValidationError(f"pairwise matrix must be square, got shape {P.shape}")
    m = P.shape[0]
    if m < 1:
        raise ValidationError("pairwise matrix must be at least 1x1")
    if not np.all(np.isfinite(P)) or np.any(P <= 0):
        raise ValidationError("pairwise matrix entries must be finite and positive")
    if not np.allclose(np.diag(P), 1.0, atol=1e-9):
        raise ValidationError("pairwise matrix diagonal must be 1")
    if not np.allclose(P * P.T, 1.0, rtol=1e-8, atol=0.0):
        raise ValidationError("pairwise matrix must be reciprocal: p[j,i] = 1/p[i,j]")

    w = np.full(m, 1.0 / m)
    for _ in range(max_iter):
        v = P @ w
        v /= v.sum()
        if np.max(np.abs(v - w)) < tol:
            w = v
            break
        w = v
    else:
        raise ComputationError(
            f"power iteration did not converge within {max_iter} iterations"
        )

    lambda_max = float((P @ w).sum())  # w sums to 1, so sum(P w) estimates the eigenvalue
    if m <= 2:
        cr = 0.0
    else:
        ci = (lambda_max - m) / (m - 1)
        cr = ci / RANDOM_INDEX.get(m, RANDOM_INDEX[10])
    if cr > CONSISTENCY_THRESHOLD:
        _warnings.warn(
            f"pairwise matrix consistency ratio {cr:.4f} exceeds "
            f"{CONSISTENCY_THRESHOLD}; weights may be unreliable",
            stacklevel=2,
        )
    return w, cr


def column_deviations(X: list[list[GreyInterval]]) -> np.ndarray:
    """Total pairwise interval distance per column, over all ordered pairs."""
    n = len(X)
    m = len(X[0]) if n else 0
    D = np.zeros(m)
    for j in range(m):
        total = 0.0
        for i in range(n):
            for k in range(i + 1, n):
                total += 2.0 * distance(X[i][j], X[k][j])
        D[j] = total
    return D


def objective_weights_opt(X: list[list[GreyInterval]]) -> np.ndarray:
    """Deviation-maximizing objective weights, normalized to sum 1.

    Proportional to the per-column total pairwise distance; columns in
    which all plans coincide get zero weight.  All-constant matrices
    leave the weights undefined.
    """
    if len(X) < 2:
        raise ValidationError(f"at least 2 plans required, got {len(X)}")
    D = column_deviations(X)
    total = D.sum()
    if total <= 0:
        raise ComputationError(
            "objective weights undefined: every column is constant "
            "(all pairwise distances are zero)"
        )
    return D / total


def entropy_weights(
    bound_matrix, names: list[str] | None = None
) -> np.ndarray:
    """Entropy weights of a non-negative real matrix, one weight per column.

    Each column is renormalized into a distribution p; its entropy
    E = -sum(p ln p) / ln(n) (with 0 ln 0 = 0) lies in [0, 1], and the
    weight is proportional to 1 - E.  Uniform columns carry no
    information and get zero weight; if every column is uniform the
    weights are undefined.
    """
    M = np.asarray(bound_matrix, dtype=float)
    if M.ndim != 2:
        raise ValidationError(f"bound matrix must be 2-D, got shape {M.shape}")
    n, m = M.shape
    if n < 2:
        raise ValidationError(f"at least 2 rows required, got {n}")
    if np.any(M < 0) or not np.all(np.isfinite(M)):
        raise ValidationError("bound matrix entries must be finite and non-negative")

    col_sums = M.sum(axis=0)
    for j in np.flatnonzero(col_sums <= 0):
        label = names[j] if names is not None else f"column {j + 1}"
        raise ComputationError(
            f"entropy weights undefined for attribute {label!r}: column sums to 0"
        )

    p = M / col_sums
    plogp = np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0)), 0.0)
    E = -plogp.sum(axis=0) / math.log(n)
    E = np.clip(E, 0.0, 1.0)  # entropy of an n-point distribution; clip rounding spill
    eta = 1.0 - E
    total = eta.sum()
    if total <= 0:
        raise ComputationError(
            "entropy weights undefined: every column is uniform (entropy 1)"
        )
    return eta / total


def comprehensive_objective(
    beta_opt, beta_lo, beta_hi
) -> list[GreyInterval]:
    """Componentwise min/max envelope of the three objective weight vectors."""
    vectors = [list(map(float, v)) for v in (beta_opt, beta_lo, beta_hi)]
    m = len(vectors[0])
    if any(len(v) != m for v in vectors):
        raise ValidationError("objective weight vectors must share one length")
    return [
        GreyInterval(min(v[j] for v in vectors), max(v[j] for v in vectors))
        for j in range(m)
    ]


def final_weights(
    alpha: list[GreyInterval], beta: list[GreyInterval]
) -> list[GreyInterval]:
    """Multiplicative fusion of subjective and objective interval weights.

    With p_j the componentwise product alpha_j * beta_j, the normalized
    weight is [p_j.lo / sum(p.hi), min(1, p_j.hi / sum(p.lo))]: the
    outer-bound interval division, clamped above at 1 so every weight
    stays within [0, 1].
    """
    if len(alpha) != len(beta):
        raise ValidationError(
            f"subjective ({len(alpha)}) and objective ({len(beta)}) weight "
            "vectors must share one length"
        )
    products = [a.mul(b) for a, b in zip(alpha, beta)]
    sum_lo = sum(p.lo for p in products)
    sum_hi = sum(p.hi for p in products)
    if sum_lo <= 0:
        raise ComputationError(
            "final weights undefined: product lower bounds sum to 0"
        )
    return [
        GreyInterval(p.lo / sum_hi, min(1.0, p.hi / sum_lo)) for p in products
    ]


@dataclass(slots=True)
class WeightSet:
    """All weight vectors of one pipeline run."""

    subjective: list[GreyInterval]
    objective_opt: np.ndarray
    entropy_lo: np.ndarray
    entropy_hi: np.ndarray
    objective: list[GreyInterval]
    final: list[GreyInterval]
    clamped: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "subjective": [w.as_pair() for w in self.subjective],
            "objective_opt": [float(v) for v in self.objective_opt],
            "entropy_lo": [float(v) for v in self.entropy_lo],
            "entropy_hi": [float(v) for v in self.entropy_hi],
            "objective": [w.as_pair() for w in self.objective],
            "final": [w.as_pair() for w in self.final],
        }


def compute_weights(
    problem: DecisionProblem,
    X: list[list[GreyInterval]],
    alpha_overrides: dict[str, GreyInterval] | None = None,
) -> WeightSet:
    """Run the full weighting stage on a normalized matrix."""
    names = problem.attribute_names()
    alpha = subjective_weights(problem.expert_weights)

    if alpha_overrides:
        alpha = list(alpha)
        for attr, value in alpha_overrides.items():
            if attr not in names:
                raise ValidationError(f"unknown attribute {attr!r} in weight override")
            if value.lo < 0 or value.hi > 1:
                raise ValidationError(
                    f"subjective weight override for {attr!r} must lie within "
                    f"[0, 1], got {value}"
                )
            alpha[names.index(attr)] = value

    beta_opt = objective_weights_opt(X)
    lo_matrix = [[cell.lo for cell in row] for row in X]
    hi_matrix = [[cell.hi for cell in row] for row in X]
    beta_ent_lo = entropy_weights(lo_matrix, names)
    beta_ent_hi = entropy_weights(hi_matrix, names)
    beta = comprehensive_objective(beta_opt, beta_ent_lo, beta_ent_hi)
    final = final_weights(alpha, beta)

    products = [a.mul(b) for a, b in zip(alpha, beta)]
    sum_lo = sum(p.lo for p in products)
    clamped = [name for name, p in zip(names, products) if p.hi / sum_lo > 1.0]

    return WeightSet(
        subjective=alpha,
        objective_opt=beta_opt,
        entropy_lo=beta_ent_lo,
        entropy_hi=beta_ent_hi,
        objective=beta,
        final=final,
        clamped=clamped,
    )
