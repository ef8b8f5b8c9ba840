"""scikit-learn style front end over the interval ranking pipeline.

Interval matrices travel as arrays of shape (n_plans, n_attributes, 2)
with the last axis holding [lo, hi], so the estimators compose with the
usual array-based tooling (pipelines, clone, get_params grids).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .errors import ValidationError
from .interval import GreyInterval
from .normalize import normalize_cost_column, normalize_effect_column
from .pipeline import run
from .problem import Attribute, AttributeKind, DecisionProblem, MethodParams


def check_interval_matrix(X) -> np.ndarray:
    """Coerce to a float array of shape (n, m, 2) and validate bounds.

    Requires finite entries, lo <= hi and lo >= 0 in every cell.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 3 or X.shape[2] != 2:
        raise ValidationError(
            f"expected an interval matrix of shape (n, m, 2), got {X.shape}"
        )
    if X.shape[0] < 1 or X.shape[1] < 1:
        raise ValidationError(f"interval matrix must be non-empty, got {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValidationError("interval matrix entries must be finite")
    bad = np.argwhere(X[:, :, 0] > X[:, :, 1])
    if bad.size:
        i, j = bad[0]
        raise ValidationError(
            f"cell ({i}, {j}): lower bound {X[i, j, 0]} exceeds upper "
            f"bound {X[i, j, 1]}"
        )
    neg = np.argwhere(X[:, :, 0] < 0)
    if neg.size:
        i, j = neg[0]
        raise ValidationError(
            f"cell ({i}, {j}): bounds must be non-negative, got {X[i, j, 0]}"
        )
    return X


def resolve_kinds(kinds, m: int) -> list[AttributeKind]:
    """Broadcast a single kind or validate a per-attribute sequence."""
    if isinstance(kinds, (str, AttributeKind)):
        kinds = [kinds] * m
    if len(kinds) != m:
        raise ValidationError(f"{len(kinds)} kinds for {m} attributes")
    resolved = []
    for k in kinds:
        try:
            resolved.append(k if isinstance(k, AttributeKind) else AttributeKind(k))
        except ValueError:
            raise ValidationError(
                f"attribute kind must be 'cost' or 'effect', got {k!r}"
            ) from None
    return resolved


def _grid_to_array(grid) -> np.ndarray:
    return np.array([[cell.as_pair() for cell in row] for row in grid])


class GreyIntervalNormalizer(TransformerMixin, BaseEstimator):
    """Column-wise self-normalization of an interval decision matrix.

    Stateless: transform rescales each column of the given matrix against
    its own sums, by attribute kind.  fit only validates.

    Parameters
    ----------
    kinds : str or sequence of str, default="effect"
        "cost" or "effect", broadcast over columns when a single value.
    """

    def __init__(self, kinds="effect"):
        self.kinds = kinds

    def fit(self, X, y=None):
        X = check_interval_matrix(X)
        resolve_kinds(self.kinds, X.shape[1])
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        X = check_interval_matrix(X)
        kinds = resolve_kinds(self.kinds, X.shape[1])
        out = np.empty_like(X)
        for j, kind in enumerate(kinds):
            column = [GreyInterval(lo, hi) for lo, hi in X[:, j]]
            if kind is AttributeKind.COST:
                normalized = normalize_cost_column(column, name=f"column {j}")
            else:
                normalized = normalize_effect_column(column, name=f"column {j}")
            out[:, j] = [g.as_pair() for g in normalized]
        return out


class GreyRelationRanker(BaseEstimator):
    """Rank plans scored by interval attributes, clusterer-style.

    fit(X) runs the whole pipeline on the given matrix (normalization,
    interval weighting, the three relation methods, Borda fusion) and
    exposes the outcome as fitted attributes; fit_predict returns the
    fused rank vector.  Like clustering, the result describes the fitted
    set itself rather than generalizing to new rows.

    Parameters
    ----------
    kinds : str or sequence of str, default="effect"
        Attribute kinds, broadcast when a single value.
    rho : float, default=0.5
        Resolution coefficient of the incidence coefficients, in (0, 1).
    theta_plus, theta_minus : float, default=0.5
        Preference coefficients of the incidence approach degree; must
        sum to 1.
    borda_weights : tuple of 3 floats, default=(1/3, 1/3, 1/3)
        Fusion weights for (grey_topsis, grey_incidence,
        max_entropy_incidence).

    Attributes
    ----------
    normalized_ : ndarray of shape (n, m, 2)
    final_weights_ : ndarray of shape (m, 2)
        Interval attribute weights after subjective/objective fusion.
    scores_ : dict of method name to ndarray of shape (n,)
    ranks_ : dict of method name to ndarray of shape (n,), 1 = best
    borda_scores_ : ndarray of shape (n,)
    final_rank_ : ndarray of shape (n,), 1 = best
    report_ : Report
        Full pipeline trace, serializable via report_.to_json().
    """

    def __init__(self, kinds="effect", rho=0.5, theta_plus=0.5,
                 theta_minus=0.5, borda_weights=(1 / 3, 1 / 3, 1 / 3)):
        self.kinds = kinds
        self.rho = rho
        self.theta_plus = theta_plus
        self.theta_minus = theta_minus
        self.borda_weights = borda_weights

    def _build_problem(self, X, expert_weights, preferences) -> DecisionProblem:
        X = check_interval_matrix(X)
        n, m = X.shape[:2]
        kinds = resolve_kinds(self.kinds, m)
        if expert_weights is None:
            expert_weights = [[1.0 / m] * m]
        else:
            W = np.asarray(expert_weights, dtype=float)
            if W.ndim != 2 or W.shape[1] != m:
                raise ValidationError(
                    f"expert_weights must have shape (L, {m}), got {W.shape}"
                )
            expert_weights = W.tolist()
        prefs = None
        if preferences is not None:
            Q = np.asarray(preferences, dtype=float)
            if Q.ndim != 2 or Q.shape != (n, 2):
                raise ValidationError(
                    f"preferences must have shape ({n}, 2), got {Q.shape}"
                )
            prefs = [GreyInterval(lo, hi) for lo, hi in Q]
        params = MethodParams(
            rho=self.rho,
            theta_plus=self.theta_plus,
            theta_minus=self.theta_minus,
            borda_weights=tuple(self.borda_weights),
        )
        return DecisionProblem(
            plans=[f"A{i + 1}" for i in range(n)],
            attributes=[Attribute(f"G{j + 1}", k) for j, k in enumerate(kinds)],
            matrix=[[GreyInterval(lo, hi) for lo, hi in row] for row in X],
            expert_weights=expert_weights,
            preferences=prefs,
            params=params,
        )

    def fit(self, X, y=None, expert_weights=None, preferences=None):
        """Run the pipeline on X.

        Parameters
        ----------
        X : array-like of shape (n, m, 2)
            Interval decision matrix, last axis [lo, hi].
        expert_weights : array-like of shape (L, m), optional
            Per-expert crisp attribute weights, each row summing to 1.
            Defaults to a single uniform expert.
        preferences : array-like of shape (n, 2), optional
            Per-plan preference intervals within [0, 1].
        """
        problem = self._build_problem(X, expert_weights, preferences)
        report = run(problem, stage="all")

        self.problem_ = problem
        self.report_ = report
        self.n_features_in_ = problem.n_attributes
        self.normalized_ = _grid_to_array(report.normalized)
        self.final_weights_ = np.array([w.as_pair() for w in report.weights.final])
        self.scores_ = {
            name: np.array(result.scores) for name, result in report.methods.items()
        }
        self.ranks_ = {
            name: np.array(result.ranks) for name, result in report.methods.items()
        }
        self.borda_scores_ = np.array(report.borda_scores)
        self.final_rank_ = np.array(report.final_rank)
        self.warnings_ = list(report.warnings)
        return self

    def fit_predict(self, X, y=None, **fit_params) -> np.ndarray:
        """Fit and return the fused rank vector (1 = best)."""
        return self.fit(X, y, **fit_params).final_rank_
