"""ROC-space machinery: operating points, convex hulls, dominance.

Classification rule throughout: a sample is called positive when its score
is greater than or equal to the threshold. Each distinct score therefore
induces one operating point, and a synthetic (0, 0) point stands for any
threshold above the top score.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Sequence

import numpy as np

from .dataset import Dataset

Dominance = Literal["first", "second", "equal", "neither"]

_TOL = 1e-12


@dataclass(frozen=True)
class ConfusionCounts:
    """Integer contingency table for one threshold."""

    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def n_p(self) -> int:
        return self.tp + self.fn

    @property
    def n_n(self) -> int:
        return self.fp + self.tn

    @property
    def n(self) -> int:
        return self.n_p + self.n_n


@dataclass(frozen=True)
class OperatingPoint:
    """One point in ROC space.

    threshold is None for the synthetic (0, 0) anchor, which corresponds to
    a threshold above every score and so has no single value in [0, 1].
    counts is None for points that carry rates only (for example the duals
    of the fixed baseline lines, which have no backing dataset).
    """

    fpr: float
    tpr: float
    threshold: float | None = None
    counts: ConfusionCounts | None = None

    def __post_init__(self) -> None:
        if not (0.0 <= self.fpr <= 1.0 and 0.0 <= self.tpr <= 1.0):
            raise ValueError("rates must lie in [0, 1]")
        if self.threshold is not None and not 0.0 <= self.threshold <= 1.0:
            raise ValueError("threshold must lie in [0, 1]")

    @classmethod
    def from_counts(cls, threshold: float | None, tp: int, fp: int,
                    n_p: int, n_n: int) -> OperatingPoint:
        counts = ConfusionCounts(tp=tp, fp=fp, tn=n_n - fp, fn=n_p - tp)
        return cls(fpr=fp / n_n, tpr=tp / n_p, threshold=threshold, counts=counts)

    def rate_key(self) -> tuple[float, float] | tuple[int, int]:
        """(x, y) key for hull geometry: exact integer counts when known."""
        if self.counts is not None:
            return (self.counts.fp, self.counts.tp)
        return (self.fpr, self.tpr)


@dataclass(frozen=True)
class RocCurve:
    """Operating points ordered by increasing (fpr, tpr), anchored at
    (0, 0) and (1, 1). is_hull marks curves in strictly convex position."""

    points: tuple[OperatingPoint, ...]
    is_hull: bool = False

    def __post_init__(self) -> None:
        pts = self.points
        if len(pts) < 2:
            raise ValueError("a curve needs at least the (0,0) and (1,1) anchors")
        if (pts[0].fpr, pts[0].tpr) != (0.0, 0.0):
            raise ValueError("curve must start at (0, 0)")
        if (pts[-1].fpr, pts[-1].tpr) != (1.0, 1.0):
            raise ValueError("curve must end at (1, 1)")
        for a, b in zip(pts, pts[1:]):
            if (b.fpr, b.tpr) <= (a.fpr, a.tpr):
                raise ValueError("points must strictly increase in (fpr, tpr) order")
        totals = {(p.counts.n_p, p.counts.n_n) for p in pts if p.counts is not None}
        if len(totals) > 1:
            raise ValueError("points carry inconsistent class totals")
        if self.is_hull:
            keys = [p.rate_key() for p in pts]
            for o, a, b in zip(keys, keys[1:], keys[2:]):
                if _cross(o, a, b) >= 0:
                    raise ValueError("hull points must be in strictly convex position")

    @cached_property
    def fprs(self) -> np.ndarray:
        arr = np.array([p.fpr for p in self.points])
        arr.flags.writeable = False
        return arr

    @cached_property
    def tprs(self) -> np.ndarray:
        arr = np.array([p.tpr for p in self.points])
        arr.flags.writeable = False
        return arr

    @property
    def class_totals(self) -> tuple[int, int] | None:
        """(n_p, n_n) when the points carry counts, else None."""
        for p in self.points:
            if p.counts is not None:
                return (p.counts.n_p, p.counts.n_n)
        return None

    def auc(self) -> float:
        return float(np.trapezoid(self.tprs, self.fprs))


def threshold_rates(data: Dataset, thresholds: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(tpr, fpr) arrays for the rule score >= threshold, vectorized."""
    ts = np.asarray(thresholds, dtype=np.float64)
    tp = data.n_p - np.searchsorted(data.positive_scores, ts, side="left")
    fp = data.n_n - np.searchsorted(data.negative_scores, ts, side="left")
    return tp / data.n_p, fp / data.n_n


def operating_points(data: Dataset) -> RocCurve:
    """All attainable operating points, one per distinct score.

    Points come out ordered by increasing (fpr, tpr), i.e. thresholds
    descending, starting from the synthetic (0, 0) anchor and ending at
    (1, 1) (the threshold at the minimum score classifies everything
    positive). Tied scores collapse into a single point.
    """
    distinct = np.unique(data.scores)[::-1]
    tp = data.n_p - np.searchsorted(data.positive_scores, distinct, side="left")
    fp = data.n_n - np.searchsorted(data.negative_scores, distinct, side="left")
    pts = [OperatingPoint.from_counts(None, 0, 0, data.n_p, data.n_n)]
    pts.extend(
        OperatingPoint.from_counts(float(t), int(tpk), int(fpk), data.n_p, data.n_n)
        for t, tpk, fpk in zip(distinct, tp, fp))
    return RocCurve(points=tuple(pts))


def _cross(o, a, b) -> float:
    """Cross product of o->a with o->b; exact when keys are integer counts."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(curve: RocCurve) -> RocCurve:
    """Upper convex hull of the curve's points, (0, 0) and (1, 1) included.

    Runs a monotone chain over the points sorted by (fpr, tpr). When the
    points carry confusion counts the turn test runs on integer counts, so
    hull membership is exact rational arithmetic rather than float luck.
    Collinear interior points are dropped; among points tied in fpr only
    the one with maximal tpr can survive.
    """
    keyed: dict[tuple, OperatingPoint] = {}
    for p in sorted(curve.points, key=lambda q: (q.fpr, q.tpr)):
        keyed.setdefault(p.rate_key(), p)
    items = sorted(keyed.items(), key=lambda kv: kv[0])
    hull: list[tuple[tuple, OperatingPoint]] = []
    for key, p in items:
        while len(hull) >= 2 and _cross(hull[-2][0], hull[-1][0], key) >= 0:
            hull.pop()
        hull.append((key, p))
    return RocCurve(points=tuple(p for _, p in hull), is_hull=True)


def _upper_boundary(curve: RocCurve, at: np.ndarray) -> np.ndarray:
    """Piecewise-linear height of the curve at the given fpr values,
    taking the top of any vertical segment."""
    xs: list[float] = []
    ys: list[float] = []
    for p in curve.points:  # points sorted by (fpr, tpr); keep max tpr per fpr
        if xs and p.fpr == xs[-1]:
            ys[-1] = p.tpr
        else:
            xs.append(p.fpr)
            ys.append(p.tpr)
    return np.interp(at, np.array(xs), np.array(ys))


def dominance(a: RocCurve, b: RocCurve) -> Dominance:
    """Compare two curves' piecewise-linear boundaries over all of [0, 1].

    Returns "first" when a is at least b everywhere and strictly above
    somewhere (tolerance 1e-12), "second" for the mirror case, "equal"
    when they coincide within tolerance, "neither" when they cross.
    Curves are compared as given; pass hulls to compare hulls. When both
    sides carry confusion counts their class priors must match.
    """
    ta, tb = a.class_totals, b.class_totals
    if ta is not None and tb is not None:
        if ta[0] * (tb[0] + tb[1]) != tb[0] * (ta[0] + ta[1]):
            raise ValueError("curves are over different class priors")
    grid = np.unique(np.concatenate([a.fprs, b.fprs]))
    diff = _upper_boundary(a, grid) - _upper_boundary(b, grid)
    a_ge = bool(np.all(diff >= -_TOL))
    b_ge = bool(np.all(diff <= _TOL))
    if a_ge and b_ge:
        return "equal"
    if a_ge:
        return "first"
    if b_ge:
        return "second"
    return "neither"
