"""Decision problem representation and its JSON file format.

A problem is a set of plans scored on attributes by interval numbers,
plus per-expert attribute weight vectors, optional per-plan preference
intervals on [0, 1], and method parameters.

File format (JSON)::

    {
      "plans": ["A1", "A2", ...],
      "attributes": [{"name": "G1", "kind": "effect"}, ...],
      "matrix": [[[lo, hi], ...], ...],
      "expert_weights": [[w1, ..., wm], ...],
      "preferences": [[lo, hi], ...],                  // optional
      "params": {"rho": 0.5, "theta_plus": 0.5,
                 "theta_minus": 0.5,
                 "borda_weights": [b1, b2, b3]}        // optional
    }
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ValidationError
from .interval import GreyInterval

WEIGHT_SUM_TOL = 1e-9


class AttributeKind(enum.Enum):
    """Whether smaller (cost) or larger (effect) raw values are better."""

    COST = "cost"
    EFFECT = "effect"


@dataclass(frozen=True, slots=True)
class Attribute:
    name: str
    kind: AttributeKind


@dataclass(frozen=True, slots=True)
class MethodParams:
    """Tunable parameters of the ranking methods.

    rho is the resolution coefficient of the incidence coefficients,
    theta_plus/theta_minus the preference coefficients of the incidence
    approach degree (theta_plus = 1, theta_minus = 0 selects the pure
    positive-ideal branch), and borda_weights the per-method weights of
    the final rank fusion.
    """

    rho: float = 0.5
    theta_plus: float = 0.5
    theta_minus: float = 0.5
    borda_weights: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)

    def validate(self):
        if not 0 < self.rho < 1:
            raise ValidationError(f"params.rho must lie in (0, 1), got {self.rho}")
        if not 0 < self.theta_plus <= 1:
            raise ValidationError(
                f"params.theta_plus must lie in (0, 1], got {self.theta_plus}"
            )
        if self.theta_minus < 0:
            raise ValidationError(
                f"params.theta_minus must be non-negative, got {self.theta_minus}"
            )
        if abs(self.theta_plus + self.theta_minus - 1.0) > WEIGHT_SUM_TOL:
            raise ValidationError(
                "params.theta_plus + params.theta_minus must equal 1, got "
                f"{self.theta_plus} + {self.theta_minus}"
            )
        if len(self.borda_weights) != 3:
            raise ValidationError(
                f"params.borda_weights must have 3 entries, got {len(self.borda_weights)}"
            )
        if any(b < 0 for b in self.borda_weights):
            raise ValidationError(
                f"params.borda_weights must be non-negative, got {self.borda_weights}"
            )
        if abs(sum(self.borda_weights) - 1.0) > WEIGHT_SUM_TOL:
            raise ValidationError(
                f"params.borda_weights must sum to 1, got {self.borda_weights}"
            )

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "theta_plus": self.theta_plus,
            "theta_minus": self.theta_minus,
            "borda_weights": list(self.borda_weights),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MethodParams":
        known = {"rho", "theta_plus", "theta_minus", "borda_weights"}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown params keys: {sorted(unknown)}")
        kwargs = {}
        for key in ("rho", "theta_plus", "theta_minus"):
            if key in data:
                kwargs[key] = float(data[key])
        if "theta_plus" in kwargs and "theta_minus" not in kwargs:
            kwargs["theta_minus"] = 1.0 - kwargs["theta_plus"]
        if "borda_weights" in data:
            kwargs["borda_weights"] = tuple(float(b) for b in data["borda_weights"])
        params = cls(**kwargs)
        params.validate()
        return params


@dataclass(slots=True)
class DecisionProblem:
    """Plans x attributes interval decision matrix plus weighting inputs."""

    plans: list[str]
    attributes: list[Attribute]
    matrix: list[list[GreyInterval]]
    expert_weights: list[list[float]]
    preferences: list[GreyInterval] | None = None
    params: MethodParams = field(default_factory=MethodParams)

    @property
    def n_plans(self) -> int:
        return len(self.plans)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def attribute_names(self) -> list[str]:
        return [a.name for a in self.attributes]

    def kinds(self) -> list[AttributeKind]:
        return [a.kind for a in self.attributes]

    def validate(self):
        n, m = self.n_plans, self.n_attributes
        if n < 2:
            raise ValidationError(f"at least 2 plans required, got {n}")
        if m < 1:
            raise ValidationError("at least 1 attribute required")
        if len(set(self.plans)) != n:
            raise ValidationError("plan identifiers must be unique")
        if len(set(self.attribute_names())) != m:
            raise ValidationError("attribute names must be unique")

        if len(self.matrix) != n:
            raise ValidationError(
                f"matrix has {len(self.matrix)} rows, expected {n} (one per plan)"
            )
        for plan, row in zip(self.plans, self.matrix):
            if len(row) != m:
                raise ValidationError(
                    f"matrix row for plan {plan!r} has {len(row)} cells, expected {m}"
                )
            for attr, cell in zip(self.attributes, row):
                if cell.lo < 0:
                    raise ValidationError(
                        f"matrix cell ({plan}, {attr.name}): bounds must be "
                        f"non-negative, got {cell}"
                    )

        if not self.expert_weights:
            raise ValidationError("at least one expert weight vector required")
        for l, vec in enumerate(self.expert_weights, start=1):
            check_weight_vector(vec, m, name=f"expert_weights[{l}]")

        if self.preferences is not None:
            if len(self.preferences) != n:
                raise ValidationError(
                    f"preferences has {len(self.preferences)} entries, expected {n}"
                )
            for plan, q in zip(self.plans, self.preferences):
                if q.lo < 0 or q.hi > 1:
                    raise ValidationError(
                        f"preference for plan {plan!r} must lie within [0, 1], got {q}"
                    )

        self.params.validate()

    def cell_index(self, plan: str, attribute: str) -> tuple[int, int]:
        try:
            i = self.plans.index(plan)
        except ValueError:
            raise ValidationError(f"unknown plan {plan!r}") from None
        try:
            j = self.attribute_names().index(attribute)
        except ValueError:
            raise ValidationError(f"unknown attribute {attribute!r}") from None
        return i, j

    def to_dict(self) -> dict:
        data = {
            "plans": list(self.plans),
            "attributes": [
                {"name": a.name, "kind": a.kind.value} for a in self.attributes
            ],
            "matrix": [[cell.as_pair() for cell in row] for row in self.matrix],
            "expert_weights": [list(vec) for vec in self.expert_weights],
        }
        if self.preferences is not None:
            data["preferences"] = [q.as_pair() for q in self.preferences]
        data["params"] = self.params.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "DecisionProblem":
        for key in ("plans", "attributes", "matrix", "expert_weights"):
            if key not in data:
                raise ValidationError(f"problem file is missing required key {key!r}")

        plans = [str(p) for p in data["plans"]]
        attributes = []
        for idx, entry in enumerate(data["attributes"], start=1):
            if not isinstance(entry, dict) or "name" not in entry or "kind" not in entry:
                raise ValidationError(
                    f"attributes[{idx}] must be an object with 'name' and 'kind'"
                )
            try:
                kind = AttributeKind(entry["kind"])
            except ValueError:
                raise ValidationError(
                    f"attributes[{idx}].kind must be 'cost' or 'effect', "
                    f"got {entry['kind']!r}"
                ) from None
            attributes.append(Attribute(str(entry["name"]), kind))

        matrix = []
        for plan, row in zip(plans, data["matrix"]):
            cells = []
            for attr, pair in zip(attributes, row):
                try:
                    cells.append(GreyInterval.from_pair(pair))
                except ValidationError as exc:
                    raise ValidationError(
                        f"matrix cell ({plan}, {attr.name}): {exc}"
                    ) from None
            if len(row) != len(attributes):
                raise ValidationError(
                    f"matrix row for plan {plan!r} has {len(row)} cells, "
                    f"expected {len(attributes)}"
                )
            matrix.append(cells)
        if len(data["matrix"]) != len(plans):
            raise ValidationError(
                f"matrix has {len(data['matrix'])} rows, expected {len(plans)}"
            )

        expert_weights = [[float(w) for w in vec] for vec in data["expert_weights"]]

        preferences = None
        if data.get("preferences") is not None:
            if len(data["preferences"]) != len(plans):
                raise ValidationError(
                    f"preferences has {len(data['preferences'])} entries, "
                    f"expected {len(plans)}"
                )
            preferences = []
            for plan, pair in zip(plans, data["preferences"]):
                try:
                    preferences.append(GreyInterval.from_pair(pair))
                except ValidationError as exc:
                    raise ValidationError(
                        f"preference for plan {plan!r}: {exc}"
                    ) from None

        params = MethodParams.from_dict(data.get("params") or {})

        problem = cls(
            plans=plans,
            attributes=attributes,
            matrix=matrix,
            expert_weights=expert_weights,
            preferences=preferences,
            params=params,
        )
        problem.validate()
        return problem


def check_weight_vector(vec, m: int, name: str = "weights"):
    """Validate a crisp weight vector: length m, non-negative, sums to 1."""
    if len(vec) != m:
        raise ValidationError(f"{name} has {len(vec)} entries, expected {m}")
    for j, w in enumerate(vec, start=1):
        if not math.isfinite(w) or w < 0:
            raise ValidationError(f"{name}[{j}] must be finite and non-negative, got {w}")
    total = sum(vec)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(f"{name} must sum to 1, got {total!r}")


def load_problem(path) -> DecisionProblem:
    """Load and validate a problem file."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read problem file: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"problem file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValidationError("problem file must contain a JSON object")
    return DecisionProblem.from_dict(data)
