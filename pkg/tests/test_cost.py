import numpy as np
import pytest

from opcurves import (CostLine, CostParams, OperatingPoint, ThresholdGrid,
                      baseline_cost_lines, brier_curve, brier_score, convex_hull,
                      cost_line, expected_loss, loss_cp, loss_decomposition,
                      lower_envelope, lower_envelope_support, operating_points,
                      per_class_components, refinement_loss)
from helpers import make_calibrated, make_random

THIRD = 1 / 3

# toy oracle values, worked out by hand from the counts
TOY_BRIER_SCORE = 2.4559 / 9
TOY_REFINEMENT = 7 / 54


class TestCostParams:
    def test_proportion(self):
        cp = CostParams(c_p=1.5, c_n=0.5)
        assert cp.proportion == pytest.approx(0.25, abs=0)

    def test_from_proportion_normalizes_to_two(self):
        cp = CostParams.from_proportion(0.2)
        assert cp.c_p == pytest.approx(1.6, abs=0)
        assert cp.c_n == pytest.approx(0.4, abs=0)
        assert cp.c_p + cp.c_n == pytest.approx(2.0, abs=0)

    def test_validation(self):
        with pytest.raises(ValueError):
            CostParams(c_p=-0.1, c_n=1.0)
        with pytest.raises(ValueError):
            CostParams(c_p=0.0, c_n=0.0)
        with pytest.raises(ValueError):
            CostParams.from_proportion(1.5)


class TestExpectedLoss:
    def test_formula(self, toy):
        # loss = C_P pi_P fnr + C_N pi_N fpr
        val = expected_loss(2 / 3, 1 / 6, toy.priors, CostParams(c_p=1.6, c_n=0.4))
        want = 1.6 * THIRD * THIRD + 0.4 * (2 / 3) * (1 / 6)
        assert val == pytest.approx(want, abs=1e-15)

    def test_loss_cp_matches_normalized(self, toy):
        for c in (0.0, 0.2, 0.5, 0.9, 1.0):
            a = loss_cp(2 / 3, 1 / 6, toy.priors, c)
            b = expected_loss(2 / 3, 1 / 6, toy.priors, CostParams.from_proportion(c))
            assert a == pytest.approx(b, abs=1e-12)


class TestCostLine:
    def test_endpoints(self, toy):
        line = cost_line(OperatingPoint(fpr=1 / 6, tpr=2 / 3), toy.priors)
        # at c=0 only misses cost; at c=1 only false alarms
        assert line.value_at(0.0) == pytest.approx(2 * THIRD * THIRD, abs=1e-12)
        assert line.value_at(1.0) == pytest.approx(2 * (2 / 3) * (1 / 6), abs=1e-12)

    def test_matches_loss_cp_bitwise(self, toy):
        cs = np.linspace(0.0, 1.0, 101)
        for p in operating_points(toy).points:
            line = cost_line(p, toy.priors)
            direct = loss_cp(p.tpr, p.fpr, toy.priors, cs)
            assert np.all(line.value_at(cs) == direct)

    def test_horizontal_condition(self, toy):
        # slope vanishes iff pi_N fpr == pi_P fnr
        line = cost_line(OperatingPoint(fpr=toy.pi_p / 2, tpr=1 - toy.pi_n / 2),
                         toy.priors)
        assert line.slope == pytest.approx(0.0, abs=1e-15)

    def test_baselines_cross_at_prevalence(self):
        from opcurves import Priors
        priors = Priors(pi_p=0.2, pi_n=0.8)
        all_pos, all_neg = baseline_cost_lines(priors)
        assert all_pos.value_at(0.2) == pytest.approx(0.32, abs=1e-12)
        assert all_neg.value_at(0.2) == pytest.approx(0.32, abs=1e-12)
        assert all_pos.value_at(0.0) == 0.0
        assert all_neg.value_at(1.0) == 0.0


class TestLowerEnvelope:
    def test_toy_tie_at_third(self, toy):
        hull = convex_hull(operating_points(toy))
        grid = ThresholdGrid(values=np.array([THIRD]))
        env = lower_envelope(hull, toy.priors, grid)
        assert env.ys[0] == pytest.approx(2 / 9, abs=1e-12)
        support = lower_envelope_support(hull, toy.priors, THIRD)
        got = {(round(p.fpr, 6), round(p.tpr, 6)) for p in support}
        assert got == {(round(1 / 6, 6), round(2 / 3, 6)), (0.5, 1.0)}

    def test_below_every_hull_line(self, toy):
        hull = convex_hull(operating_points(toy))
        grid = ThresholdGrid.cost_default()
        env = lower_envelope(hull, toy.priors, grid)
        for p in hull.points:
            line = cost_line(p, toy.priors)
            assert np.all(env.ys <= line.value_at(grid.values))

    def test_zero_at_extremes(self, toy):
        # the all-negative line pins c=0, the all-positive line pins c=1
        hull = convex_hull(operating_points(toy))
        grid = ThresholdGrid(values=np.array([0.0, 1.0]))
        env = lower_envelope(hull, toy.priors, grid)
        assert env.ys[0] == 0.0
        assert env.ys[1] == 0.0

    def test_requires_hull(self, toy):
        with pytest.raises(ValueError, match="hull"):
            lower_envelope(operating_points(toy), toy.priors,
                           ThresholdGrid.cost_default())


class TestBrierCurve:
    def test_toy_point_value(self, toy):
        grid = ThresholdGrid(values=np.array([0.2]))
        bc = brier_curve(toy, grid)
        assert bc.series == "brier"
        assert bc.ys[0] == pytest.approx(2 / 15, abs=1e-12)

    def test_components_sum_bitwise(self, toy):
        grid = ThresholdGrid.cost_default()
        bc = brier_curve(toy, grid)
        pos, neg = per_class_components(toy, grid)
        assert pos.series == "positive_component"
        assert neg.series == "negative_component"
        assert np.all(pos.ys + neg.ys == bc.ys)
        assert np.all(pos.ys >= 0.0)
        assert np.all(neg.ys >= 0.0)

    def test_endpoints(self, toy):
        grid = ThresholdGrid(values=np.array([0.0, 1.0]))
        bc = brier_curve(toy, grid)
        # t=0 predicts all positive: no fn, fp weight 0; t=1 the reverse
        assert bc.ys[0] == 0.0
        # at t=1 every score below 1 is negative, so fn cost only
        assert bc.ys[1] == 0.0


class TestBrierScore:
    def test_toy_equals_mse(self, toy):
        assert brier_score(toy) == pytest.approx(TOY_BRIER_SCORE, abs=1e-12)
        mse = float(np.mean((toy.scores - toy.labels) ** 2))
        assert brier_score(toy) == pytest.approx(mse, abs=1e-12)

    def test_equals_mse_on_random_data(self):
        for seed in range(10):
            data = make_random(seed, n=157, pi_p=0.3)
            mse = float(np.mean((data.scores - data.labels) ** 2))
            assert brier_score(data) == pytest.approx(mse, abs=1e-9)

    def test_ties_do_not_break_identity(self):
        # repeated scores only pinch the curve at isolated points, so the
        # area still equals the mean squared error
        rng = np.random.default_rng(5)
        scores = np.round(rng.random(300), 1)
        labels = (rng.random(300) < scores).astype(int)
        if labels.min() == labels.max():
            labels[0] = 1 - labels[0]
        from opcurves import Dataset
        data = Dataset(scores, labels)
        mse = float(np.mean((data.scores - data.labels) ** 2))
        assert brier_score(data) == pytest.approx(mse, abs=1e-9)


class TestRefinement:
    def test_toy_value(self, toy):
        hull = convex_hull(operating_points(toy))
        assert refinement_loss(hull, toy.priors) == pytest.approx(
            TOY_REFINEMENT, abs=1e-12)

    def test_matches_numeric_integration(self):
        for seed in range(5):
            data = make_random(seed, n=90, pi_p=0.4)
            hull = convex_hull(operating_points(data))
            grid = ThresholdGrid.regular(0.0, 1.0, 1e-4)
            env = lower_envelope(hull, data.priors, grid)
            numeric = float(np.trapezoid(env.ys, grid.values))
            assert refinement_loss(hull, data.priors) == pytest.approx(
                numeric, abs=1e-6)


class TestDecomposition:
    def test_toy_parts(self, toy):
        dec = loss_decomposition(toy, ThresholdGrid.cost_default())
        assert dec.brier_score == pytest.approx(TOY_BRIER_SCORE, abs=1e-12)
        assert dec.refinement == pytest.approx(TOY_REFINEMENT, abs=1e-12)
        assert dec.calibration == pytest.approx(
            TOY_BRIER_SCORE - TOY_REFINEMENT, abs=1e-12)
        assert dec.calibration >= 0.0

    def test_gap_curve_is_nonnegative(self, toy):
        dec = loss_decomposition(toy, ThresholdGrid.cost_default())
        assert dec.gap_curve.series == "calibration_gap"
        assert np.all(dec.gap_curve.ys >= 0.0)

    def test_calibrated_model_collapses(self):
        data = make_calibrated()
        grid = ThresholdGrid.cost_default()
        dec = loss_decomposition(data, grid)
        assert dec.calibration == pytest.approx(0.0, abs=1e-12)
        bc = brier_curve(data, grid)
        hull = convex_hull(operating_points(data))
        env = lower_envelope(hull, data.priors, grid)
        np.testing.assert_allclose(bc.ys, env.ys, rtol=0, atol=1e-12)

    def test_nonnegative_on_random_data(self):
        grid = ThresholdGrid.cost_default()
        for seed in range(10):
            data = make_random(seed, n=120, pi_p=0.25)
            dec = loss_decomposition(data, grid)
            assert dec.calibration >= 0.0
            assert dec.refinement >= 0.0
            assert dec.brier_score == pytest.approx(
                dec.refinement + dec.calibration, abs=1e-12)
