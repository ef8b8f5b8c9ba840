import numpy as np
import pytest

from greyrank import (
    Attribute,
    AttributeKind,
    ComputationError,
    DecisionProblem,
    GreyInterval,
    normalize,
    normalize_cost_column,
    normalize_effect_column,
)

TOL = 1e-12


def column(pairs):
    return [GreyInterval(lo, hi) for lo, hi in pairs]


class TestEffectColumn:
    def test_reference_column(self):
        # lows (6,7,5,6,7) sum 31, highs (8,9,7,7,8) sum 39
        col = column([(6, 8), (7, 9), (5, 7), (6, 7), (7, 8)])
        out = normalize_effect_column(col)
        assert out[0].lo == pytest.approx(6 / 39, abs=TOL)
        assert out[0].hi == pytest.approx(8 / 31, abs=TOL)

    def test_single_degenerate_self_normalizes(self):
        out = normalize_effect_column(column([(4.2, 4.2)]))
        assert out[0] == GreyInterval(1, 1)

    def test_identical_degenerate_pair_splits_evenly(self):
        out = normalize_effect_column(column([(3, 3), (3, 3)]))
        assert all(g == GreyInterval(0.5, 0.5) for g in out)

    def test_zero_lower_sum_names_attribute(self):
        with pytest.raises(ComputationError, match="G4"):
            normalize_effect_column(column([(0, 1), (0, 2)]), name="G4")

    def test_scale_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            lows = rng.uniform(0.1, 10, 4)
            col = column([(lo, lo + w) for lo, w in zip(lows, rng.uniform(0, 5, 4))])
            c = rng.uniform(0.1, 100)
            scaled = [g.scale(c) for g in col]
            base = normalize_effect_column(col)
            again = normalize_effect_column(scaled)
            for g, h in zip(base, again):
                assert g.lo == pytest.approx(h.lo, abs=TOL)
                assert g.hi == pytest.approx(h.hi, abs=TOL)

    def test_column_sum_bounds(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            lows = rng.uniform(0.1, 10, 5)
            col = column([(lo, lo + w) for lo, w in zip(lows, rng.uniform(0, 5, 5))])
            out = normalize_effect_column(col)
            assert sum(g.lo for g in out) <= 1 + TOL
            assert sum(g.hi for g in out) >= 1 - TOL

    def test_degenerate_reduces_to_sum_normalization(self):
        vals = [2.0, 3.0, 5.0]
        out = normalize_effect_column(column([(v, v) for v in vals]))
        for g, v in zip(out, vals):
            assert g.lo == pytest.approx(v / 10, abs=TOL)
            assert g.hi == pytest.approx(v / 10, abs=TOL)


class TestCostColumn:
    def test_single_plan(self):
        out = normalize_cost_column(column([(2, 4)]))
        assert out[0].lo == pytest.approx(0.5, abs=TOL)
        assert out[0].hi == pytest.approx(2.0, abs=TOL)

    def test_identical_degenerate_pair_splits_evenly(self):
        out = normalize_cost_column(column([(2, 2), (2, 2)]))
        assert all(g == GreyInterval(0.5, 0.5) for g in out)

    def test_single_degenerate_self_normalizes(self):
        out = normalize_cost_column(column([(7, 7)]))
        assert out[0] == GreyInterval(1, 1)

    def test_nonpositive_lower_bound_names_cell(self):
        with pytest.raises(ComputationError, match=r"A2.*G1"):
            normalize_cost_column(
                column([(1, 2), (0, 2)]), name="G1", plans=["A1", "A2"]
            )

    def test_scale_invariance_and_sum_bounds(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            lows = rng.uniform(0.1, 10, 4)
            col = column([(lo, lo + w) for lo, w in zip(lows, rng.uniform(0, 5, 4))])
            out = normalize_cost_column(col)
            assert sum(g.lo for g in out) <= 1 + TOL
            assert sum(g.hi for g in out) >= 1 - TOL
            c = rng.uniform(0.1, 100)
            again = normalize_cost_column([g.scale(c) for g in col])
            for g, h in zip(out, again):
                assert g.lo == pytest.approx(h.lo, abs=TOL)
                assert g.hi == pytest.approx(h.hi, abs=TOL)


def make_problem(pairs_rows, kinds):
    n = len(pairs_rows)
    m = len(pairs_rows[0])
    return DecisionProblem(
        plans=[f"A{i+1}" for i in range(n)],
        attributes=[Attribute(f"G{j+1}", AttributeKind(k)) for j, k in enumerate(kinds)],
        matrix=[[GreyInterval(lo, hi) for lo, hi in row] for row in pairs_rows],
        expert_weights=[[1.0 / m] * m],
    )


class TestNormalizeMatrix:
    def test_first_column_matches_column_op(self):
        rows = [
            [(6, 8), (8, 9)],
            [(7, 9), (5, 7)],
            [(5, 7), (6, 8)],
            [(6, 7), (7, 8)],
            [(7, 8), (6, 7)],
        ]
        problem = make_problem(rows, ["effect", "effect"])
        X = normalize(problem)
        expected = normalize_effect_column([row[0] for row in problem.matrix])
        for got, want in zip((row[0] for row in X), expected):
            assert got == want

    def test_mixed_kinds_columns_independent(self):
        rows = [[(2, 3), (5, 6)], [(1, 4), (7, 9)], [(3, 5), (4, 8)]]
        problem = make_problem(rows, ["cost", "effect"])
        X = normalize(problem)
        swapped = make_problem([[r[1], r[0]] for r in rows], ["effect", "cost"])
        X_swapped = normalize(swapped)
        for i in range(3):
            assert X[i][0] == X_swapped[i][1]
            assert X[i][1] == X_swapped[i][0]

    def test_error_propagates_with_cell_name(self):
        rows = [[(1, 2)], [(0, 2)]]
        problem = make_problem(rows, ["cost"])
        with pytest.raises(ComputationError, match=r"A2.*G1"):
            normalize(problem)
