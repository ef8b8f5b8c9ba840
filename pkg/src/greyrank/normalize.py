"""Column-wise normalization of interval decision matrices.

Every column is rescaled against its own sums so the result is
dimensionless and scale-invariant.  Effect columns (larger is better)
divide each bound by the opposite-bound column sum; cost columns
(smaller is better) do the same to the reciprocals.  Either way the
normalized column satisfies sum(lo) <= 1 <= sum(hi).
"""

from __future__ import annotations

from .errors import ComputationError
from .interval import GreyInterval
from .problem import AttributeKind, DecisionProblem


def normalize_effect_column(
    column: list[GreyInterval],
    name: str | None = None,
    plans: list[str] | None = None,
) -> list[GreyInterval]:
    """Normalize an effect column: lo / sum(hi), hi / sum(lo)."""
    label = name if name is not None else "effect column"
    lo_sum = sum(g.lo for g in column)
    hi_sum = sum(g.hi for g in column)
    if lo_sum <= 0:
        raise ComputationError(
            f"normalization undefined for attribute {label!r}: "
            f"column lower bounds sum to {lo_sum}"
        )
    return [GreyInterval(g.lo / hi_sum, g.hi / lo_sum) for g in column]


def normalize_cost_column(
    column: list[GreyInterval],
    name: str | None = None,
    plans: list[str] | None = None,
) -> list[GreyInterval]:
    """Normalize a cost column: (1/hi) / sum(1/lo), (1/lo) / sum(1/hi)."""
    label = name if name is not None else "cost column"
    for i, g in enumerate(column):
        if g.lo <= 0:
            plan = plans[i] if plans is not None else f"row {i + 1}"
            raise ComputationError(
                f"cost normalization undefined: cell ({plan}, {label}) has "
                f"non-positive lower bound {g.lo} (reciprocal required)"
            )
    inv_lo_sum = sum(1.0 / g.lo for g in column)
    inv_hi_sum = sum(1.0 / g.hi for g in column)
    return [
        GreyInterval((1.0 / g.hi) / inv_lo_sum, (1.0 / g.lo) / inv_hi_sum)
        for g in column
    ]


def normalize(problem: DecisionProblem) -> list[list[GreyInterval]]:
    """Normalize each column of the decision matrix per its attribute kind."""
    columns = []
    for j, attr in enumerate(problem.attributes):
        column = [row[j] for row in problem.matrix]
        if attr.kind is AttributeKind.COST:
            columns.append(normalize_cost_column(column, attr.name, problem.plans))
        else:
            columns.append(normalize_effect_column(column, attr.name, problem.plans))
    return [[columns[j][i] for j in range(len(columns))] for i in range(len(problem.matrix))]
