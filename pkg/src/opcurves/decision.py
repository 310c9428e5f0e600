"""Threshold-space evaluation: net benefit and decision curves.

Net benefit at threshold t weighs true positives against false positives,
NB(t) = u_P(t) * pi_P * TPR - u_N(t) * pi_N * FPR, where the weighting
scheme decides what one unit of each is worth. Three schemes are built in:

- dca: u_P = 1, u_N = t / (1 - t). The threshold doubles as the odds at
  which a user is indifferent between treating and not treating, so the
  curve reads as benefit per person in treated-true-positive units.
- brier_scaled: u_P = 2(1 - t), u_N = 2t. The same ranking at fixed t,
  rescaled so the curve is directly comparable to Brier-style losses.
- explicit: constant non-negative u_P, u_N supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .dataset import Dataset, Priors
from .roc import OperatingPoint, RocCurve, threshold_rates

_SUPPORT_TOL = 1e-12

ArrayLike = Union[float, np.ndarray]


def _thresholds(t: ArrayLike) -> np.ndarray:
    arr = np.asarray(t, dtype=np.float64)
    if arr.size and (not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError("thresholds must be finite and lie in [0, 1]")
    return arr


def _unwrap(out: np.ndarray) -> ArrayLike:
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class UtilityScheme:
    """Threshold-dependent weights (u_P, u_N) for net benefit."""

    kind: str
    u_p_const: float | None = None
    u_n_const: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("dca", "brier_scaled", "explicit"):
            raise ValueError(f"unknown scheme kind {self.kind!r}")
        if self.kind == "explicit":
            if self.u_p_const is None or self.u_n_const is None:
                raise ValueError("explicit scheme needs constant u_p and u_n")
            if self.u_p_const < 0.0 or self.u_n_const < 0.0:
                raise ValueError("explicit utilities must be non-negative")
            if self.u_p_const == 0.0 and self.u_n_const == 0.0:
                raise ValueError("explicit utilities must not both be zero")
        elif self.u_p_const is not None or self.u_n_const is not None:
            raise ValueError(f"{self.kind} scheme takes no utility constants")

    @classmethod
    def dca(cls) -> UtilityScheme:
        return cls(kind="dca")

    @classmethod
    def brier_scaled(cls) -> UtilityScheme:
        return cls(kind="brier_scaled")

    @classmethod
    def explicit(cls, u_p: float, u_n: float) -> UtilityScheme:
        return cls(kind="explicit", u_p_const=float(u_p), u_n_const=float(u_n))

    def u_p(self, t: ArrayLike) -> ArrayLike:
        arr = _thresholds(t)
        if self.kind == "dca":
            return _unwrap(np.ones_like(arr))
        if self.kind == "brier_scaled":
            return _unwrap(2.0 * (1.0 - arr))
        return _unwrap(np.full_like(arr, self.u_p_const))

    def u_n(self, t: ArrayLike) -> ArrayLike:
        arr = _thresholds(t)
        if self.kind == "dca":
            if arr.size and arr.max() == 1.0:
                raise ValueError("dca weighting t/(1-t) is undefined at t = 1")
            return _unwrap(arr / (1.0 - arr))
        if self.kind == "brier_scaled":
            return _unwrap(2.0 * arr)
        return _unwrap(np.full_like(arr, self.u_n_const))


@dataclass(frozen=True)
class ThresholdGrid:
    """Strictly increasing evaluation grid inside [0, 1].

    The same container serves the threshold axis of decision curves and
    the cost-proportion axis of cost-space curves. Grids that touch 1.0
    are legal here; evaluating the dca weighting at 1.0 is what fails.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("grid must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)) or arr[0] < 0.0 or arr[-1] > 1.0:
            raise ValueError("grid values must be finite and lie in [0, 1]")
        if np.any(np.diff(arr) <= 0.0):
            raise ValueError("grid values must be strictly increasing")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def regular(cls, start: float, stop: float, step: float) -> ThresholdGrid:
        """Arithmetic grid from start by step; stop is included when it is
        within 1e-12 of a whole number of steps, else the grid ends at the
        last value below it."""
        if step <= 0.0:
            raise ValueError("step must be positive")
        if stop <= start:
            raise ValueError("stop must exceed start")
        ratio = (stop - start) / step
        count = int(round(ratio))
        values = start + step * np.arange(count + 1)
        if count >= 1 and abs(values[-1] - stop) <= 1e-12:
            values[-1] = stop
        else:
            count = int(np.floor(ratio + 1e-12))
            values = start + step * np.arange(count + 1)
            values = values[values <= stop + 1e-12]
        return cls(values=values)

    @classmethod
    def decision_default(cls) -> ThresholdGrid:
        return cls.regular(0.0, 0.99, 0.005)

    @classmethod
    def cost_default(cls) -> ThresholdGrid:
        return cls.regular(0.0, 1.0, 0.005)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class Curve:
    """A sampled curve: ys over xs, with a series label and the priors it
    was computed under. Labels in use: model, treat_all, treat_none,
    upper_envelope, brier, lower_envelope, all_positive, all_negative,
    positive_component, negative_component, calibration_gap."""

    xs: np.ndarray
    ys: np.ndarray
    series: str
    priors: Priors

    def __post_init__(self) -> None:
        xs = np.array(self.xs, dtype=np.float64)
        ys = np.array(self.ys, dtype=np.float64)
        if xs.ndim != 1 or xs.shape != ys.shape or xs.size == 0:
            raise ValueError("xs and ys must be equal-length non-empty 1-d arrays")
        if np.any(np.diff(xs) <= 0.0):
            raise ValueError("xs must be strictly increasing")
        if not self.series:
            raise ValueError("series label must be non-empty")
        xs.flags.writeable = False
        ys.flags.writeable = False
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)


def net_benefit(tpr: ArrayLike, fpr: ArrayLike, priors: Priors,
                t: ArrayLike, scheme: UtilityScheme | None = None) -> ArrayLike:
    """NB = u_P(t) * pi_P * TPR - u_N(t) * pi_N * FPR.

    Broadcasts over rates and thresholds; defaults to the dca scheme.
    """
    scheme = scheme if scheme is not None else UtilityScheme.dca()
    u_p = scheme.u_p(t)
    u_n = scheme.u_n(t)
    out = np.asarray(u_p * priors.pi_p * tpr - u_n * priors.pi_n * fpr)
    return _unwrap(out)


def decision_curve(data: Dataset, grid: ThresholdGrid,
                   scheme: UtilityScheme | None = None) -> Curve:
    """The model's net benefit across the grid (series "model")."""
    tpr, fpr = threshold_rates(data, grid.values)
    ys = net_benefit(tpr, fpr, data.priors, grid.values, scheme)
    return Curve(xs=grid.values, ys=ys, series="model", priors=data.priors)


def baseline_decision_curves(priors: Priors, grid: ThresholdGrid,
                             scheme: UtilityScheme | None = None) -> tuple[Curve, Curve]:
    """(treat_all, treat_none) reference curves, generated analytically.

    treat_all is the policy TPR = FPR = 1; under the dca scheme it crosses
    zero exactly at t = pi_P. treat_none is identically zero.
    """
    ts = grid.values
    all_ys = net_benefit(1.0, 1.0, priors, ts, scheme)
    none_ys = net_benefit(0.0, 0.0, priors, ts, scheme)
    return (Curve(xs=ts, ys=all_ys, series="treat_all", priors=priors),
            Curve(xs=ts, ys=none_ys, series="treat_none", priors=priors))


def _require_hull(hull: RocCurve) -> None:
    if not hull.is_hull:
        raise ValueError("expected a convex hull; pass convex_hull(operating_points(data))")


def _require_threshold_scheme(scheme: UtilityScheme) -> None:
    if scheme.kind not in ("dca", "brier_scaled"):
        raise ValueError("threshold envelopes are defined for the dca and "
                         "brier_scaled schemes only")


def upper_envelope_decision_curve(hull: RocCurve, priors: Priors,
                                  grid: ThresholdGrid,
                                  scheme: UtilityScheme | None = None) -> Curve:
    """Best attainable net benefit at each threshold (series "upper_envelope").

    The maximizer of NB over all operating points is always a hull vertex
    because NB is linear in (fpr, tpr), so the max runs over hull vertices
    only; tests check this against an exhaustive all-points oracle.
    """
    scheme = scheme if scheme is not None else UtilityScheme.dca()
    _require_hull(hull)
    _require_threshold_scheme(scheme)
    nb = net_benefit(hull.tprs[:, None], hull.fprs[:, None], priors,
                     grid.values, scheme)
    return Curve(xs=grid.values, ys=np.max(nb, axis=0),
                 series="upper_envelope", priors=priors)


def upper_envelope_support(hull: RocCurve, priors: Priors, t: float,
                           scheme: UtilityScheme | None = None) -> tuple[OperatingPoint, ...]:
    """Hull points attaining the envelope at t, within 1e-12 of the max."""
    scheme = scheme if scheme is not None else UtilityScheme.dca()
    _require_hull(hull)
    _require_threshold_scheme(scheme)
    vals = net_benefit(hull.tprs, hull.fprs, priors, float(t), scheme)
    best = float(np.max(vals))
    return tuple(p for p, v in zip(hull.points, vals) if v >= best - _SUPPORT_TOL)


def standardized_net_benefit(curve_or_value: Curve | ArrayLike,
                             pi_p: float) -> Curve | ArrayLike:
    """Net benefit divided by prevalence, so 1.0 is the perfect model."""
    if pi_p <= 0.0:
        raise ValueError("prevalence must be positive")
    if isinstance(curve_or_value, Curve):
        c = curve_or_value
        return Curve(xs=c.xs, ys=c.ys / pi_p, series=c.series, priors=c.priors)
    return _unwrap(np.asarray(curve_or_value) / pi_p)
