"""End-to-end orchestration: normalize, weight, rank, fuse, report.

A run executes the stages in dependency order and returns a Report
whose JSON form is byte-deterministic for identical inputs.  Floats
serialize with Python's shortest round-trip representation (at most 17
significant digits), so golden files compare exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ValidationError
from .interval import GreyInterval, grid_as_pairs, interval_grid
from .normalize import normalize
from .problem import DecisionProblem
from .ranking import (
    IdealVectors,
    Method,
    RankingResult,
    blend_preference,
    entropy_incidence_scores,
    ideal_vectors,
    incidence_coefficients,
    incidence_degrees,
    incidence_scores,
    max_entropy_weights,
    topsis_scores,
    weighted_borda,
    weighted_matrix,
)
from .weighting import WeightSet, compute_weights

STAGES = ("normalize", "weights", "rank", "all")
ALL_METHODS = (Method.GREY_TOPSIS, Method.GREY_INCIDENCE, Method.MAX_ENTROPY_INCIDENCE)


@dataclass(slots=True)
class Report:
    """Full pipeline trace for the selected stage."""

    stage: str
    problem: DecisionProblem
    normalized: list[list[GreyInterval]]
    weights: WeightSet | None = None
    blended: list[list[GreyInterval]] | None = None
    weighted: list[list[GreyInterval]] | None = None
    ideals: IdealVectors | None = None
    methods: dict[str, RankingResult] = field(default_factory=dict)
    borda_weights: list[float] | None = None
    borda_scores: list[float] | None = None
    final_rank: list[int] | None = None
    warnings: list[str] = field(default_factory=list)
    _fusion_ties: list[list[int]] = field(default_factory=list)

    @property
    def final_order(self) -> list[str] | None:
        """Plan identifiers from best to worst."""
        if self.final_rank is None:
            return None
        pairs = sorted(zip(self.final_rank, self.problem.plans))
        return [plan for _, plan in pairs]

    def tie_groups(self) -> dict[str, list[list[str]]]:
        """Exactly tied plans per method and for the fusion, as plan ids."""
        plans = self.problem.plans
        groups = {
            name: [[plans[i] for i in g] for g in result.trace["tie_groups"]]
            for name, result in self.methods.items()
        }
        if self.final_rank is not None:
            groups["fusion"] = [[plans[i] for i in g] for g in self._fusion_ties]
        return groups

    def to_dict(self) -> dict:
        data = {
            "stage": self.stage,
            "problem": self.problem.to_dict(),
            "normalized": grid_as_pairs(self.normalized),
        }
        if self.weights is not None:
            data["weights"] = self.weights.to_dict()
        if self.blended is not None:
            data["blended"] = grid_as_pairs(self.blended)
        if self.weighted is not None:
            data["weighted"] = grid_as_pairs(self.weighted)
        if self.ideals is not None:
            data["ideals"] = self.ideals.to_dict()
        if self.methods:
            data["methods"] = {
                name: result.to_dict() for name, result in self.methods.items()
            }
        if self.final_rank is not None:
            plans = self.problem.plans
            data["fusion"] = {
                "borda_weights": self.borda_weights,
                "borda_scores": self.borda_scores,
                "final_rank": self.final_rank,
                "order": self.final_order,
                "tie_groups": [
                    [plans[i] for i in group] for group in self._fusion_ties
                ],
            }
        data["warnings"] = list(self.warnings)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _validate_methods(methods) -> list[Method]:
    if methods is None:
        return list(ALL_METHODS)
    selected = []
    for item in methods:
        if isinstance(item, Method):
            selected.append(item)
        else:
            try:
                selected.append(Method(item))
            except ValueError:
                names = [m.value for m in ALL_METHODS]
                raise ValidationError(
                    f"unknown method {item!r}; choose from {names}"
                ) from None
    if not selected:
        raise ValidationError("at least one ranking method must be selected")
    # canonical order, duplicates dropped
    return [m for m in ALL_METHODS if m in selected]


def run(
    problem: DecisionProblem,
    stage: str = "all",
    methods=None,
    alpha_overrides: dict[str, GreyInterval] | None = None,
    normalized: list[list[GreyInterval]] | None = None,
) -> Report:
    """Execute the pipeline through the requested stage.

    `normalized` injects a precomputed normalized matrix (for example
    the output of a previous stage="normalize" run) in place of
    recomputing it; dimensions must match the problem.
    """
    if stage not in STAGES:
        raise ValidationError(f"unknown stage {stage!r}; choose from {STAGES}")
    problem.validate()
    selected = _validate_methods(methods)
    warnings: list[str] = []

    if normalized is None:
        X = normalize(problem)
    else:
        if len(normalized) != problem.n_plans or any(
            len(row) != problem.n_attributes for row in normalized
        ):
            raise ValidationError(
                "precomputed normalized matrix dimensions do not match the problem"
            )
        X = [list(row) for row in normalized]

    report = Report(stage=stage, problem=problem, normalized=X, warnings=warnings)
    if stage == "normalize":
        return report

    if alpha_overrides:
        for attr, value in sorted(alpha_overrides.items()):
            warnings.append(f"subjective weight override applied: alpha.{attr}={value}")
    ws = compute_weights(problem, X, alpha_overrides)
    for name in ws.clamped:
        warnings.append(f"final weight upper bound clamped at 1 for attribute {name!r}")
    report.weights = ws
    if stage == "weights":
        return report

    plans = problem.plans
    z = blend_preference(X, problem.preferences)
    Y = weighted_matrix(z, ws.final)
    ideals = ideal_vectors(Y)
    report.blended = z
    report.weighted = Y
    report.ideals = ideals

    params = problem.params
    results: dict[Method, RankingResult] = {}

    if Method.GREY_TOPSIS in selected:
        result = topsis_scores(Y, ideals)
        for i in result.trace["degenerate"]:
            warnings.append(
                f"{result.method.value}: plan {plans[i]!r} is equidistant-degenerate "
                "(D+ + D- = 0); score defined as 0.5"
            )
        results[Method.GREY_TOPSIS] = result

    if Method.GREY_INCIDENCE in selected or Method.MAX_ENTROPY_INCIDENCE in selected:
        R = incidence_coefficients(Y, ideals, params.rho)
        for sign in R.degenerate:
            warnings.append(
                f"incidence coefficients: all distances to the {sign} ideal are "
                "zero; coefficients defined as 1"
            )
        g_plus, g_minus = incidence_degrees(R)

        if Method.GREY_INCIDENCE in selected:
            result = incidence_scores(
                g_plus, g_minus, params.theta_plus, params.theta_minus
            )
            result.trace["r_plus"] = R.r_plus
            result.trace["r_minus"] = R.r_minus
            results[Method.GREY_INCIDENCE] = result

        if Method.MAX_ENTROPY_INCIDENCE in selected:
            beta1, beta2 = max_entropy_weights(g_plus, g_minus)
            results[Method.MAX_ENTROPY_INCIDENCE] = entropy_incidence_scores(
                g_plus, g_minus, beta1, beta2
            )

    for method, result in results.items():
        for group in result.trace["tie_groups"]:
            tied = ", ".join(plans[i] for i in group)
            warnings.append(f"{method.value}: tied plans {tied}")

    borda_weights = [params.borda_weights[ALL_METHODS.index(m)] for m in selected]
    total = sum(borda_weights)
    if total <= 0:
        raise ValidationError(
            "Borda weights of the selected methods sum to 0; no fusion possible"
        )
    borda_weights = [w / total for w in borda_weights]

    scores, final_rank, fusion_ties = weighted_borda(
        [results[m].ranks for m in selected], borda_weights
    )
    for group in fusion_ties:
        tied = ", ".join(plans[i] for i in group)
        warnings.append(f"borda fusion: tied plans {tied}")

    report.methods = {m.value: results[m] for m in selected}
    report.borda_weights = borda_weights
    report.borda_scores = scores
    report.final_rank = final_rank
    report._fusion_ties = fusion_ties
    return report


def parse_override(text: str) -> tuple[str, str, GreyInterval]:
    """Parse one override like "A2.G3=[6.5,7.5]", "q.A2=[0.5,0.6]" or
    "alpha.G1=[0.1,0.3]".

    Returns (kind, target, value) with kind one of "cell", "preference",
    "alpha"; cell targets keep the "plan.attribute" form.
    """
    if "=" not in text:
        raise ValidationError(f"override {text!r} must have the form target=[lo,hi]")
    target, _, raw_value = text.partition("=")
    target = target.strip()
    try:
        pair = json.loads(raw_value)
    except json.JSONDecodeError:
        raise ValidationError(
            f"override value {raw_value!r} is not a [lo, hi] pair"
        ) from None
    value = GreyInterval.from_pair(pair)
    parts = target.split(".")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise ValidationError(
            f"override target {target!r} must be plan.attribute, q.plan or "
            "alpha.attribute"
        )
    head, tail = parts
    if head == "q":
        return "preference", tail, value
    if head == "alpha":
        return "alpha", tail, value
    return "cell", target, value


def apply_overrides(
    problem: DecisionProblem, overrides: list[str]
) -> tuple[DecisionProblem, dict[str, GreyInterval]]:
    """Produce the perturbed problem plus subjective weight overrides."""
    data = problem.to_dict()
    alpha_overrides: dict[str, GreyInterval] = {}
    names = problem.attribute_names()
    for text in overrides:
        kind, target, value = parse_override(text)
        if kind == "cell":
            plan, _, attr = target.partition(".")
            i, j = problem.cell_index(plan, attr)
            data["matrix"][i][j] = value.as_pair()
        elif kind == "preference":
            if data.get("preferences") is None:
                raise ValidationError(
                    f"cannot override q.{target}: the problem has no preferences"
                )
            if target not in problem.plans:
                raise ValidationError(f"unknown plan {target!r}")
            data["preferences"][problem.plans.index(target)] = value.as_pair()
        else:
            if target not in names:
                raise ValidationError(f"unknown attribute {target!r}")
            alpha_overrides[target] = value
    return DecisionProblem.from_dict(data), alpha_overrides


@dataclass(slots=True)
class WhatIfResult:
    baseline: Report
    perturbed: Report
    diff: dict

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline.to_dict(),
            "perturbed": self.perturbed.to_dict(),
            "diff": self.diff,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def whatif(
    problem: DecisionProblem, overrides: list[str], methods=None
) -> WhatIfResult:
    """Rank the problem before and after the overrides and diff the result."""
    baseline = run(problem, stage="all", methods=methods)
    perturbed_problem, alpha_overrides = apply_overrides(problem, overrides)
    perturbed = run(
        perturbed_problem, stage="all", methods=methods,
        alpha_overrides=alpha_overrides or None,
    )
    changed = [
        {"plan": plan, "baseline_rank": before, "perturbed_rank": after}
        for plan, before, after in zip(
            problem.plans, baseline.final_rank, perturbed.final_rank
        )
        if before != after
    ]
    diff = {
        "changed": changed,
        "tie_flags": {
            "baseline": baseline.tie_groups(),
            "perturbed": perturbed.tie_groups(),
        },
    }
    return WhatIfResult(baseline=baseline, perturbed=perturbed, diff=diff)
