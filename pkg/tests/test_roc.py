import numpy as np
import pytest

from opcurves import (ConfusionCounts, Dataset, OperatingPoint, RocCurve,
                      convex_hull, dominance, operating_points, threshold_rates)
from helpers import make_random

TOY_POINTS = [(0.0, 0.0), (0.0, 1 / 3), (1 / 6, 2 / 3), (1 / 2, 2 / 3),
              (1 / 2, 1.0), (2 / 3, 1.0), (5 / 6, 1.0), (1.0, 1.0)]
TOY_HULL_INTERIOR = [(0.0, 1 / 3), (1 / 6, 2 / 3), (1 / 2, 1.0)]


def test_operating_points_toy(toy):
    curve = operating_points(toy)
    got = [(p.fpr, p.tpr) for p in curve.points]
    assert got == pytest.approx([xy for xy in TOY_POINTS], abs=1e-12)
    # one point per distinct score plus the all-negative anchor
    assert len(curve.points) == 8
    assert curve.points[0].threshold is None
    assert [p.threshold for p in curve.points[1:]] == [
        0.95, 0.90, 0.70, 0.20, 0.10, 0.05, 0.03]


def test_operating_points_carry_counts(toy):
    curve = operating_points(toy)
    p = curve.points[2]
    assert p.counts == ConfusionCounts(tp=2, fp=1, tn=5, fn=1)
    assert p.counts.n_p == 3 and p.counts.n_n == 6


def test_threshold_rates_half_open(toy):
    # scores >= t are positive, so t exactly at a score includes it
    tpr, fpr = threshold_rates(toy, np.array([0.70]))
    assert tpr[0] == pytest.approx(2 / 3, abs=0)
    assert fpr[0] == pytest.approx(3 / 6, abs=0)
    tpr, fpr = threshold_rates(toy, np.array([0.71]))
    assert tpr[0] == pytest.approx(2 / 3, abs=0)
    assert fpr[0] == pytest.approx(1 / 6, abs=0)


def test_hull_toy_interior_exact(toy):
    hull = convex_hull(operating_points(toy))
    interior = [(p.fpr, p.tpr) for p in hull.points[1:-1]]
    assert len(interior) == len(TOY_HULL_INTERIOR)
    for got, want in zip(interior, TOY_HULL_INTERIOR):
        assert got[0] == pytest.approx(want[0], abs=1e-12)
        assert got[1] == pytest.approx(want[1], abs=1e-12)
    assert hull.is_hull


def test_hull_contains_all_points(toy):
    curve = operating_points(toy)
    hull = convex_hull(curve)
    xs = np.array([p.fpr for p in hull.points])
    ys = np.array([p.tpr for p in hull.points])
    for p in curve.points:
        assert p.tpr <= np.interp(p.fpr, xs, ys) + 1e-12


def test_hull_idempotent(toy):
    hull = convex_hull(operating_points(toy))
    again = convex_hull(hull)
    assert [(p.fpr, p.tpr) for p in again.points] == [
        (p.fpr, p.tpr) for p in hull.points]


def test_hull_random_matches_brute_force():
    # a hull vertex is a point no convex combination of others dominates;
    # check by maximizing tpr - m * fpr over a fan of slopes
    for seed in range(5):
        data = make_random(seed, n=60, pi_p=0.4)
        curve = operating_points(data)
        hull = convex_hull(curve)
        for m in np.linspace(0.0, 20.0, 200):
            best = max(p.tpr - m * p.fpr for p in curve.points)
            best_hull = max(p.tpr - m * p.fpr for p in hull.points)
            assert best_hull == pytest.approx(best, abs=1e-12)


def test_auc_toy(toy):
    curve = operating_points(toy)
    assert curve.auc() == pytest.approx(29 / 36, abs=1e-12)
    assert convex_hull(curve).auc() == pytest.approx(31 / 36, abs=1e-12)


def test_curve_validation():
    with pytest.raises(ValueError):
        RocCurve(points=(OperatingPoint(0.0, 0.0),))  # too short
    with pytest.raises(ValueError, match="start"):
        RocCurve(points=(OperatingPoint(0.1, 0.1), OperatingPoint(1.0, 1.0)))
    with pytest.raises(ValueError, match="end"):
        RocCurve(points=(OperatingPoint(0.0, 0.0), OperatingPoint(0.9, 1.0)))


def test_operating_point_validation():
    with pytest.raises(ValueError):
        OperatingPoint(fpr=-0.1, tpr=0.5)
    with pytest.raises(ValueError):
        OperatingPoint(fpr=0.1, tpr=1.5)
    with pytest.raises(ValueError):
        ConfusionCounts(tp=-1, fp=0, tn=1, fn=1)


def test_dominance_strict():
    a = Dataset(np.array([0.1, 0.2, 0.8, 0.9]), np.array([0, 0, 1, 1]))
    b = Dataset(np.array([0.8, 0.9, 0.1, 0.2]), np.array([0, 0, 1, 1]))
    assert dominance(operating_points(a), operating_points(b)) == "first"
    assert dominance(operating_points(b), operating_points(a)) == "second"
    assert dominance(operating_points(a), operating_points(a)) == "equal"


def test_dominance_neither(toy):
    # better start (tpr 2/3 at fpr 0) but flat afterwards: curves cross
    other = Dataset(np.array([0.5, 0.5, 0.5, 0.95, 0.5, 0.5, 0.95, 0.5, 0.05]),
                    np.array(list(toy.labels)))
    d = dominance(operating_points(toy), operating_points(other))
    assert d == "neither"


def test_dominance_requires_same_priors(toy):
    other = make_random(3, n=10, pi_p=0.5)
    with pytest.raises(ValueError, match="prior"):
        dominance(operating_points(toy), operating_points(other))


def test_rate_arrays_read_only(toy):
    curve = operating_points(toy)
    with pytest.raises(ValueError):
        curve.fprs[0] = 0.5
