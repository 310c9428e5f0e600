"""Cost-space evaluation: cost lines, Brier curves and loss decomposition.

Expected loss at an operating point under per-error costs C_P (missing a
positive) and C_N (flagging a negative) is

    loss = C_P * pi_P * (1 - TPR) + C_N * pi_N * FPR.

Normalizing C_P + C_N = 2 collapses the pair into one cost proportion
c = C_N / (C_N + C_P), and each operating point becomes a line in c.
Thresholding a probabilistic scorer at t = c and charging costs (2(1-c),
2c) yields the Brier curve; its area over c in [0, 1] is exactly the
Brier score, which is what ties threshold space and cost space together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, Priors
from .decision import ArrayLike, Curve, ThresholdGrid, _unwrap
from .roc import OperatingPoint, RocCurve, convex_hull, operating_points, threshold_rates

_SUPPORT_TOL = 1e-12
_CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class CostParams:
    """Per-error costs: c_p for a missed positive, c_n for a flagged negative."""

    c_p: float
    c_n: float

    def __post_init__(self) -> None:
        if self.c_p < 0.0 or self.c_n < 0.0:
            raise ValueError("error costs must be non-negative")
        if self.c_p == 0.0 and self.c_n == 0.0:
            raise ValueError("error costs must not both be zero")

    @property
    def proportion(self) -> float:
        """c = c_n / (c_n + c_p), the fraction of total cost on false positives."""
        return self.c_n / (self.c_n + self.c_p)

    @classmethod
    def from_proportion(cls, c: float) -> CostParams:
        """The unique costs with c_p + c_n = 2 and the given proportion."""
        if not 0.0 <= c <= 1.0:
            raise ValueError("cost proportion must lie in [0, 1]")
        return cls(c_p=2.0 * (1.0 - c), c_n=2.0 * c)


@dataclass(frozen=True)
class CostLine:
    """Dual of one ROC point: normalized expected loss as a line in c."""

    slope: float
    intercept: float
    source: OperatingPoint

    def value_at(self, c: ArrayLike) -> ArrayLike:
        # identical float arrangement to loss_cp, so the duality is bitwise
        return _unwrap(np.asarray(self.intercept + np.asarray(c, dtype=np.float64) * self.slope))

    __call__ = value_at


def expected_loss(tpr: ArrayLike, fpr: ArrayLike, priors: Priors,
                  costs: CostParams) -> ArrayLike:
    out = costs.c_p * priors.pi_p * (1.0 - np.asarray(tpr)) \
        + costs.c_n * priors.pi_n * np.asarray(fpr)
    return _unwrap(np.asarray(out))


def loss_cp(tpr: ArrayLike, fpr: ArrayLike, priors: Priors, c: ArrayLike) -> ArrayLike:
    """Expected loss at cost proportion c with costs normalized to sum 2.

    Computed as intercept + c * slope with the exact arrangement used by
    CostLine, so evaluating a point's line reproduces this bit for bit.
    """
    tpr = np.asarray(tpr, dtype=np.float64)
    fpr = np.asarray(fpr, dtype=np.float64)
    intercept = 2.0 * priors.pi_p * (1.0 - tpr)
    slope = 2.0 * (priors.pi_n * fpr - priors.pi_p * (1.0 - tpr))
    return _unwrap(np.asarray(intercept + np.asarray(c, dtype=np.float64) * slope))


def cost_line(point: OperatingPoint, priors: Priors) -> CostLine:
    """The point's loss as a function of cost proportion.

    gradient 2(pi_N FPR - pi_P(1 - TPR)), intercept 2 pi_P (1 - TPR); the
    line is horizontal exactly when pi_N FPR = pi_P (1 - TPR).
    """
    slope = 2.0 * (priors.pi_n * point.fpr - priors.pi_p * (1.0 - point.tpr))
    intercept = 2.0 * priors.pi_p * (1.0 - point.tpr)
    return CostLine(slope=slope, intercept=intercept, source=point)


def baseline_cost_lines(priors: Priors) -> tuple[CostLine, CostLine]:
    """(all_positive, all_negative) reference lines.

    They are the duals of ROC points (1, 1) and (0, 0): y = 2 pi_N c and
    y = 2 pi_P (1 - c), intersecting at c = pi_P with value 2 pi_P pi_N.
    """
    return (cost_line(OperatingPoint(fpr=1.0, tpr=1.0), priors),
            cost_line(OperatingPoint(fpr=0.0, tpr=0.0), priors))


def _require_hull(hull: RocCurve) -> None:
    if not hull.is_hull:
        raise ValueError("expected a convex hull; pass convex_hull(operating_points(data))")


def lower_envelope(hull: RocCurve, priors: Priors, grid: ThresholdGrid) -> Curve:
    """Pointwise minimum of the hull vertices' cost lines (series
    "lower_envelope"): the best loss any attainable classifier reaches at
    each cost proportion."""
    _require_hull(hull)
    slopes, intercepts = _hull_lines(hull, priors)
    vals = intercepts[:, None] + grid.values[None, :] * slopes[:, None]
    return Curve(xs=grid.values, ys=np.min(vals, axis=0),
                 series="lower_envelope", priors=priors)


def lower_envelope_support(hull: RocCurve, priors: Priors,
                           c: float) -> tuple[OperatingPoint, ...]:
    """Hull points whose lines attain the envelope at c, within 1e-12."""
    _require_hull(hull)
    slopes, intercepts = _hull_lines(hull, priors)
    vals = intercepts + float(c) * slopes
    best = float(np.min(vals))
    return tuple(p for p, v in zip(hull.points, vals) if v <= best + _SUPPORT_TOL)


def _hull_lines(hull: RocCurve, priors: Priors) -> tuple[np.ndarray, np.ndarray]:
    slopes = 2.0 * (priors.pi_n * hull.fprs - priors.pi_p * (1.0 - hull.tprs))
    intercepts = 2.0 * priors.pi_p * (1.0 - hull.tprs)
    return slopes, intercepts


def _brier_terms(tpr: np.ndarray, fpr: np.ndarray, priors: Priors,
                 t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-class halves of the Brier curve; their sum is the curve."""
    pos = 2.0 * (1.0 - t) * priors.pi_p * (1.0 - tpr)
    neg = 2.0 * t * priors.pi_n * fpr
    return pos, neg


def brier_curve(data: Dataset, grid: ThresholdGrid) -> Curve:
    """Loss of thresholding at t, charged at cost proportion c = t:

        BC(t) = 2[(1 - t) pi_P (1 - TPR_t) + t pi_N FPR_t]

    (series "brier"). BC(0) = 0 because everything is called positive and
    false positives are free there; BC(1) = 0 likewise when no score
    reaches 1.
    """
    tpr, fpr = threshold_rates(data, grid.values)
    pos, neg = _brier_terms(tpr, fpr, data.priors, grid.values)
    return Curve(xs=grid.values, ys=pos + neg, series="brier", priors=data.priors)


def per_class_components(data: Dataset, grid: ThresholdGrid) -> tuple[Curve, Curve]:
    """Positive and negative halves of the Brier curve (series
    "positive_component" and "negative_component"); they sum to it
    bit-for-bit because all three share the same subexpressions."""
    tpr, fpr = threshold_rates(data, grid.values)
    pos, neg = _brier_terms(tpr, fpr, data.priors, grid.values)
    priors = data.priors
    return (Curve(xs=grid.values, ys=pos, series="positive_component", priors=priors),
            Curve(xs=grid.values, ys=neg, series="negative_component", priors=priors))


def brier_score(data: Dataset) -> float:
    """Area under the Brier curve over c in [0, 1], integrated exactly.

    The curve is piecewise linear in t between breakpoints at 0, each
    distinct score, and 1, so the trapezoid rule on those segments is
    exact. The result equals the mean squared error (1/n) sum (s - y)^2;
    ties among scores do not disturb the identity because a threshold
    coinciding with a score only changes the curve at isolated points.
    """
    b = np.unique(np.concatenate([[0.0], data.scores, [1.0]]))
    lo, hi = b[:-1], b[1:]
    # on the open segment (lo, hi) the rule s >= t classifies {s > lo}
    # positive, so the false-negative and false-positive counts are
    fn = np.searchsorted(data.positive_scores, lo, side="right")
    fp = data.n_n - np.searchsorted(data.negative_scores, lo, side="right")
    # trapezoid of (2/n)[(1-t) fn + t fp] over [lo, hi]
    mid_fn = ((1.0 - lo) + (1.0 - hi)) / 2.0
    mid_fp = (lo + hi) / 2.0
    seg = (hi - lo) * (mid_fn * fn + mid_fp * fp)
    return float(2.0 * seg.sum() / data.n)


def refinement_loss(hull: RocCurve, priors: Priors) -> float:
    """Area under the lower envelope over c in [0, 1], integrated exactly.

    The envelope is concave piecewise linear; walking the hull vertices in
    reverse ROC order gives the active lines in order of increasing c, with
    switch points where consecutive vertices' lines intersect.
    """
    _require_hull(hull)
    slopes, intercepts = _hull_lines(hull, priors)
    if slopes.size == 1:
        lo = np.array([0.0])
        hi = np.array([1.0])
        a, b = slopes, intercepts
    else:
        switches = (intercepts[:-1] - intercepts[1:]) / (slopes[1:] - slopes[:-1])
        bounds = np.concatenate([[0.0], switches[::-1], [1.0]])
        # guard against last-ulp wobble in the switch points
        bounds = np.clip(np.maximum.accumulate(bounds), 0.0, 1.0)
        lo, hi = bounds[:-1], bounds[1:]
        a, b = slopes[::-1], intercepts[::-1]
    v_lo = b + a * lo
    v_hi = b + a * hi
    return float(np.sum((hi - lo) * (v_lo + v_hi) / 2.0))


@dataclass(frozen=True)
class LossDecomposition:
    """brier_score = refinement + calibration.

    refinement is the loss an optimally recalibrated version of the scorer
    would still pay (area under the lower envelope); calibration is the
    surplus the actual scores pay on top. gap_curve samples the pointwise
    gap between the Brier curve and the envelope.
    """

    brier_score: float
    refinement: float
    calibration: float
    gap_curve: Curve


def loss_decomposition(data: Dataset, grid: ThresholdGrid) -> LossDecomposition:
    """Split the Brier score into refinement and calibration parts.

    Both areas are integrated exactly, so calibration is non-negative up
    to float rounding; negatives within 1e-12 of zero are clamped to 0.
    A perfectly calibrated scorer has calibration 0 and a gap curve that
    is zero everywhere.
    """
    hull = convex_hull(operating_points(data))
    priors = data.priors
    bs = brier_score(data)
    refinement = refinement_loss(hull, priors)
    calibration = bs - refinement
    if -_CLAMP_TOL < calibration < 0.0:
        calibration = 0.0
    gap = brier_curve(data, grid).ys - lower_envelope(hull, priors, grid).ys
    gap = np.where((gap < 0.0) & (gap > -_CLAMP_TOL), 0.0, gap)
    return LossDecomposition(
        brier_score=bs, refinement=refinement, calibration=calibration,
        gap_curve=Curve(xs=grid.values, ys=gap, series="calibration_gap",
                        priors=priors))
