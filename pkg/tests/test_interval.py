import math

import numpy as np
import pytest

from greyrank import GreyInterval, ValidationError, distance

TOL = 1e-12


class TestConstruction:
    def test_reversed_bounds_rejected(self):
        with pytest.raises(ValidationError):
            GreyInterval(2.0, 1.0)

    def test_nan_rejected(self):
        with pytest.raises(ValidationError):
            GreyInterval(float("nan"), 1.0)

    def test_degenerate_allowed(self):
        g = GreyInterval(3.0, 3.0)
        assert g.is_degenerate

    def test_pair_roundtrip(self):
        g = GreyInterval.from_pair([1.5, 2.5])
        assert g.as_pair() == [1.5, 2.5]

    def test_bad_pair_rejected(self):
        with pytest.raises(ValidationError):
            GreyInterval.from_pair([1.0])


class TestDistance:
    def test_right_triangle(self):
        assert distance(GreyInterval(0, 0), GreyInterval(3, 4)) == pytest.approx(5.0, abs=TOL)

    def test_identity(self):
        assert distance(GreyInterval(2, 5), GreyInterval(2, 5)) == 0.0

    def test_hand_evaluation(self):
        # lo diff 1, hi diff 2 -> sqrt(1 + 4)
        got = distance(GreyInterval(1, 2), GreyInterval(2, 4))
        assert got == pytest.approx(math.sqrt(5), abs=TOL)

    def test_symmetry_and_identity_of_indiscernibles(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a_lo, b_lo = rng.uniform(0, 10, 2)
            a = GreyInterval(a_lo, a_lo + rng.uniform(0, 5))
            b = GreyInterval(b_lo, b_lo + rng.uniform(0, 5))
            assert distance(a, b) == distance(b, a)
            assert distance(a, a) == 0.0
            if distance(a, b) == 0.0:
                assert a.lo == b.lo and a.hi == b.hi

    def test_triangle_inequality(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            ivals = []
            for _ in range(3):
                lo = rng.uniform(0, 10)
                ivals.append(GreyInterval(lo, lo + rng.uniform(0, 5)))
            a, b, c = ivals
            assert distance(a, c) <= distance(a, b) + distance(b, c) + TOL

    def test_degenerate_pairs_scale_by_sqrt2(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            a, b = rng.uniform(0, 10, 2)
            got = distance(GreyInterval(a, a), GreyInterval(b, b))
            assert got == pytest.approx(math.sqrt(2) * abs(a - b), abs=TOL)


class TestAdd:
    def test_additive_identity(self):
        g = GreyInterval(2.5, 7.0)
        assert GreyInterval(0, 0).add(g) == g

    def test_componentwise(self):
        assert GreyInterval(1, 2).add(GreyInterval(3, 4)) == GreyInterval(4, 6)

    def test_degenerate_acts_like_reals(self):
        got = GreyInterval(0.3, 0.3) + GreyInterval(0.7, 0.7)
        assert got == GreyInterval(1.0, 1.0)


class TestScale:
    def test_halving(self):
        got = GreyInterval(0.4, 0.6).scale(0.5)
        assert got.lo == pytest.approx(0.2, abs=TOL)
        assert got.hi == pytest.approx(0.3, abs=TOL)

    def test_identity_and_annihilator(self):
        g = GreyInterval(1.25, 4.5)
        assert g.scale(1.0) == g
        assert g.scale(0.0) == GreyInterval(0, 0)

    def test_negative_factor_rejected(self):
        with pytest.raises(ValidationError):
            GreyInterval(1, 2).scale(-0.5)


class TestMul:
    def test_multiplicative_identity(self):
        g = GreyInterval(0.4, 1.7)
        assert GreyInterval(1, 1).mul(g) == g

    def test_componentwise_product(self):
        got = GreyInterval(0.5, 0.6) * GreyInterval(0.2, 0.3)
        assert got.lo == pytest.approx(0.10, abs=TOL)
        assert got.hi == pytest.approx(0.18, abs=TOL)

    def test_annihilator(self):
        assert GreyInterval(0, 0).mul(GreyInterval(3, 9)) == GreyInterval(0, 0)

    def test_negative_bounds_rejected(self):
        with pytest.raises(ValidationError):
            GreyInterval(-1, 2).mul(GreyInterval(0, 1))

    def test_ops_preserve_bound_order(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            lo1, lo2 = rng.uniform(0, 5, 2)
            a = GreyInterval(lo1, lo1 + rng.uniform(0, 5))
            b = GreyInterval(lo2, lo2 + rng.uniform(0, 5))
            assert a.add(b).lo <= a.add(b).hi
            assert a.mul(b).lo <= a.mul(b).hi
