"""Plan evaluation: grey TOPSIS, grey incidence and max-entropy
comprehensive incidence, fused by a weighted Borda count.

All three methods score plans from the same comprehensive weighted
interval matrix against per-column bound-wise ideal vectors.  Rankings
break ties by ascending plan index and flag them in the trace, never
silently.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import ValidationError
from .interval import GreyInterval, distance
from .problem import WEIGHT_SUM_TOL


class Method(enum.Enum):
    GREY_TOPSIS = "grey_topsis"
    GREY_INCIDENCE = "grey_incidence"
    MAX_ENTROPY_INCIDENCE = "max_entropy_incidence"


@dataclass(slots=True)
class IdealVectors:
    """Per-column bound-wise extrema: the synthetic best and worst rows."""

    positive: list[GreyInterval]
    negative: list[GreyInterval]

    def to_dict(self) -> dict:
        return {
            "positive": [g.as_pair() for g in self.positive],
            "negative": [g.as_pair() for g in self.negative],
        }


@dataclass(slots=True)
class IncidenceMatrices:
    """Incidence coefficients of every cell against both ideals.

    Entries lie in (0, 1], reaching 1 exactly where the cell distance
    attains the global minimum for that sign.  `degenerate` lists the
    signs ("positive"/"negative") whose distance field was identically
    zero, in which case every coefficient is defined as 1.
    """

    r_plus: list[list[float]]
    r_minus: list[list[float]]
    degenerate: list[str] = field(default_factory=list)


@dataclass(slots=True)
class RankingResult:
    """Scores, 1-based ranks (1 = best) and method intermediates."""

    method: Method
    scores: list[float]
    ranks: list[int]
    trace: dict

    def to_dict(self) -> dict:
        return {
            "scores": list(self.scores),
            "ranks": list(self.ranks),
            "trace": self.trace,
        }


def blend_preference(
    X: list[list[GreyInterval]], q: list[GreyInterval] | None
) -> list[list[GreyInterval]]:
    """Average each row with its plan preference: z = q/2 + x/2.

    Absent preferences leave the matrix unchanged.
    """
    if q is None:
        return [list(row) for row in X]
    if len(q) != len(X):
        raise ValidationError(
            f"preferences has {len(q)} entries, expected {len(X)} (one per plan)"
        )
    for i, qi in enumerate(q, start=1):
        if qi.lo < 0 or qi.hi > 1:
            raise ValidationError(
                f"preference {i} must lie within [0, 1], got {qi}"
            )
    return [
        [qi.scale(0.5).add(x.scale(0.5)) for x in row]
        for qi, row in zip(q, X)
    ]


def weighted_matrix(
    z: list[list[GreyInterval]], w: list[GreyInterval]
) -> list[list[GreyInterval]]:
    """Columnwise interval product y_ij = w_j * z_ij."""
    if any(len(row) != len(w) for row in z):
        raise ValidationError(
            f"weight vector length {len(w)} does not match matrix width"
        )
    return [[wj.mul(zij) for wj, zij in zip(w, row)] for row in z]


def ideal_vectors(Y: list[list[GreyInterval]]) -> IdealVectors:
    """Bound-wise column maxima (positive) and minima (negative)."""
    if not Y:
        raise ValidationError("matrix must have at least one row")
    m = len(Y[0])
    positive = [
        GreyInterval(max(row[j].lo for row in Y), max(row[j].hi for row in Y))
        for j in range(m)
    ]
    negative = [
        GreyInterval(min(row[j].lo for row in Y), min(row[j].hi for row in Y))
        for j in range(m)
    ]
    return IdealVectors(positive=positive, negative=negative)


def _row_distance(row: list[GreyInterval], ideal: list[GreyInterval]) -> float:
    return math.sqrt(
        sum((y.hi - g.hi) ** 2 + (y.lo - g.lo) ** 2 for y, g in zip(row, ideal))
    )


def topsis_scores(Y: list[list[GreyInterval]], ideals: IdealVectors) -> RankingResult:
    """Relative approach degree to the ideal rows: C = D- / (D+ + D-).

    A plan equal to both ideals bound-wise (all plans identical) has
    D+ + D- = 0; its score is defined as 0.5 and flagged rather than
    aborting the run.
    """
    d_plus = [_row_distance(row, ideals.positive) for row in Y]
    d_minus = [_row_distance(row, ideals.negative) for row in Y]
    scores = []
    degenerate = []
    for i, (dp, dm) in enumerate(zip(d_plus, d_minus)):
        if dp + dm == 0.0:
            scores.append(0.5)
            degenerate.append(i)
        else:
            scores.append(dm / (dp + dm))
    ranks, ties = scores_to_ranks(scores)
    trace = {
        "d_plus": d_plus,
        "d_minus": d_minus,
        "degenerate": degenerate,
        "tie_groups": ties,
    }
    return RankingResult(Method.GREY_TOPSIS, scores, ranks, trace)


def incidence_coefficients(
    Y: list[list[GreyInterval]], ideals: IdealVectors, rho: float
) -> IncidenceMatrices:
    """Grey incidence coefficients of every cell against both ideals.

    r = (min_d + rho * max_d) / (d + rho * max_d), with the min/max taken
    globally over all cells, separately per sign.  If every distance for
    a sign is zero, all its coefficients are defined as 1 and the sign is
    flagged as degenerate.
    """
    if not 0 < rho < 1:
        raise ValidationError(f"rho must lie in (0, 1), got {rho}")

    def coefficients(ideal: list[GreyInterval]) -> tuple[list[list[float]], bool]:
        d = [[distance(y, g) for y, g in zip(row, ideal)] for row in Y]
        flat = [v for row in d for v in row]
        mn, mx = min(flat), max(flat)
        if mx == 0.0:
            return [[1.0 for _ in row] for row in d], True
        return [
            [(mn + rho * mx) / (v + rho * mx) for v in row] for row in d
        ], False

    r_plus, plus_degenerate = coefficients(ideals.positive)
    r_minus, minus_degenerate = coefficients(ideals.negative)
    degenerate = []
    if plus_degenerate:
        degenerate.append("positive")
    if minus_degenerate:
        degenerate.append("negative")
    return IncidenceMatrices(r_plus=r_plus, r_minus=r_minus, degenerate=degenerate)


def incidence_degrees(R: IncidenceMatrices) -> tuple[list[float], list[float]]:
    """Row means of the coefficient matrices: whole-plan closeness per sign."""
    g_plus = [sum(row) / len(row) for row in R.r_plus]
    g_minus = [sum(row) / len(row) for row in R.r_minus]
    return g_plus, g_minus


def incidence_scores(
    g_plus: list[float],
    g_minus: list[float],
    theta_plus: float,
    theta_minus: float,
) -> RankingResult:
    """Preference-weighted approach degree of the incidence degrees.

    C' = G+ t+ / (G+ t+ + G- t-); the boundary setting t+ = 1, t- = 0
    degenerates to C' = G+.
    """
    if len(g_plus) != len(g_minus):
        raise ValidationError("incidence degree vectors must share one length")
    if not 0 < theta_plus <= 1 or theta_minus < 0:
        raise ValidationError(
            f"preference coefficients out of range: {theta_plus}, {theta_minus}"
        )
    if abs(theta_plus + theta_minus - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(
            f"preference coefficients must sum to 1, got {theta_plus} + {theta_minus}"
        )
    if theta_minus == 0.0:
        scores = list(g_plus)
    else:
        scores = [
            gp * theta_plus / (gp * theta_plus + gm * theta_minus)
            for gp, gm in zip(g_plus, g_minus)
        ]
    ranks, ties = scores_to_ranks(scores)
    trace = {
        "g_plus": list(g_plus),
        "g_minus": list(g_minus),
        "theta_plus": theta_plus,
        "theta_minus": theta_minus,
        "tie_groups": ties,
    }
    return RankingResult(Method.GREY_INCIDENCE, scores, ranks, trace)


def max_entropy_weights(
    g_plus: list[float], g_minus: list[float]
) -> tuple[float, float]:
    """Entropy-regularized mixing weights for the two incidence degrees.

    The utility-plus-entropy objective under beta1 + beta2 = 1 has the
    logistic solution beta1 = e^s / (1 + e^s) with
    s = sum(G+ + G- - 1).  Evaluated via the saturating branch so large
    |s| cannot overflow.
    """
    if len(g_plus) != len(g_minus):
        raise ValidationError("incidence degree vectors must share one length")
    for g in (*g_plus, *g_minus):
        if not 0 < g <= 1:
            raise ValidationError(f"incidence degrees must lie in (0, 1], got {g}")
    s = sum(gp + gm - 1.0 for gp, gm in zip(g_plus, g_minus))
    if s >= 0:
        e = math.exp(-s)
        beta1, beta2 = 1.0 / (1.0 + e), e / (1.0 + e)
    else:
        e = math.exp(s)
        beta1, beta2 = e / (1.0 + e), 1.0 / (1.0 + e)
    return beta1, beta2


def entropy_incidence_scores(
    g_plus: list[float],
    g_minus: list[float],
    beta1: float,
    beta2: float,
) -> RankingResult:
    """Comprehensive incidence degree C'' = b1 G+ + b2 (1 - G-)."""
    if len(g_plus) != len(g_minus):
        raise ValidationError("incidence degree vectors must share one length")
    if beta1 < 0 or beta2 < 0 or abs(beta1 + beta2 - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(
            f"mixing weights must be non-negative and sum to 1, got {beta1}, {beta2}"
        )
    scores = [beta1 * gp + beta2 * (1.0 - gm) for gp, gm in zip(g_plus, g_minus)]
    ranks, ties = scores_to_ranks(scores)
    trace = {
        "g_plus": list(g_plus),
        "g_minus": list(g_minus),
        "beta1": beta1,
        "beta2": beta2,
        "tie_groups": ties,
    }
    return RankingResult(Method.MAX_ENTROPY_INCIDENCE, scores, ranks, trace)


def scores_to_ranks(scores: list[float]) -> tuple[list[int], list[list[int]]]:
    """Ranks by descending score, 1 = best.

    Exact score ties break by ascending plan index and are returned as
    groups of tied plan indices (0-based), ordered best first.
    """
    for s in scores:
        if not math.isfinite(s):
            raise ValidationError(f"scores must be finite, got {s}")
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    ranks = [0] * len(scores)
    for position, i in enumerate(order, start=1):
        ranks[i] = position

    tie_groups = []
    group = [order[0]] if order else []
    for prev, cur in zip(order, order[1:]):
        if scores[cur] == scores[prev]:
            group.append(cur)
        else:
            if len(group) > 1:
                tie_groups.append(group)
            group = [cur]
    if len(group) > 1:
        tie_groups.append(group)
    return ranks, tie_groups


def weighted_borda(
    rank_vectors: list[list[int]], weights: list[float]
) -> tuple[list[float], list[int], list[list[int]]]:
    """Weighted Borda fusion of rank vectors over the same plan set.

    Plan i scores sum_k weights[k] * (n - rank_k[i]); the fused rank
    sorts scores descending with the same index tie-break as
    scores_to_ranks.  Returns (scores, final_rank, tie_groups).
    """
    if not rank_vectors:
        raise ValidationError("at least one rank vector required")
    if len(weights) != len(rank_vectors):
        raise ValidationError(
            f"{len(weights)} weights for {len(rank_vectors)} rank vectors"
        )
    if any(w < 0 for w in weights):
        raise ValidationError(f"Borda weights must be non-negative, got {weights}")
    if abs(sum(weights) - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(f"Borda weights must sum to 1, got {weights}")
    n = len(rank_vectors[0])
    for k, ranks in enumerate(rank_vectors, start=1):
        if len(ranks) != n:
            raise ValidationError(
                f"rank vector {k} has {len(ranks)} entries, expected {n}"
            )
        if sorted(ranks) != list(range(1, n + 1)):
            raise ValidationError(
                f"rank vector {k} is not a permutation of 1..{n}: {ranks}"
            )

    scores = [
        sum(w * (n - ranks[i]) for w, ranks in zip(weights, rank_vectors))
        for i in range(n)
    ]
    final_rank, ties = scores_to_ranks(scores)
    return scores, final_rank, ties
