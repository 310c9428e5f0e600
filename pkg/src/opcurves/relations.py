"""Cross-space identities and model comparison.

At a common threshold t, net benefit under the dca weighting and the Brier
curve value are two views of the same quantity:

    NB(t) = pi_P - BC(t) / (2 (1 - t)).

The map is affine and decreasing in BC at fixed t, so the two spaces rank
any pair of models identically at each threshold, and the within-space
envelopes are images of each other. Differences BETWEEN thresholds are
weighed differently by the two spaces, which is what compare_models makes
visible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .cost import brier_curve, loss_cp
from .dataset import Dataset, Priors
from .decision import (ArrayLike, Curve, ThresholdGrid, UtilityScheme, _unwrap,
                       decision_curve, net_benefit)
from .roc import OperatingPoint, RocCurve

_SIGN_TOL = 1e-12
_CHUNK = 8192


class PriorMismatchError(ValueError):
    """Two datasets under comparison have different class priors."""


def nb_from_brier_loss(bc: ArrayLike, t: ArrayLike, pi_p: float) -> ArrayLike:
    """Recover dca net benefit from the Brier curve value at the same t."""
    t = np.asarray(t, dtype=np.float64)
    if t.size and (t.min() < 0.0 or t.max() >= 1.0):
        raise ValueError("the identity needs t in [0, 1)")
    return _unwrap(np.asarray(pi_p - np.asarray(bc) / (2.0 * (1.0 - t))))


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Model A versus model B at every grid threshold, in both spaces.

    agree[i] is True when sign(delta_nb) == -sign(delta_bc) at grid point
    i, with magnitudes below 1e-12 treated as zero so float noise on a
    mathematically tied comparison cannot flip a sign.
    """

    grid: ThresholdGrid
    priors: Priors
    nb_a: np.ndarray
    nb_b: np.ndarray
    bc_a: np.ndarray
    bc_b: np.ndarray
    delta_nb: np.ndarray
    delta_bc: np.ndarray
    agree: np.ndarray

    @property
    def agree_at_all_t(self) -> bool:
        return bool(np.all(self.agree))

    def records(self) -> Iterator[dict]:
        for i, t in enumerate(self.grid.values):
            yield {
                "t": float(t),
                "nb_a": float(self.nb_a[i]),
                "nb_b": float(self.nb_b[i]),
                "bc_a": float(self.bc_a[i]),
                "bc_b": float(self.bc_b[i]),
                "delta_nb": float(self.delta_nb[i]),
                "delta_bc": float(self.delta_bc[i]),
                "agree": bool(self.agree[i]),
            }

    def to_dict(self) -> dict:
        return {
            "priors": {"pi_p": self.priors.pi_p, "pi_n": self.priors.pi_n},
            "grid": [float(t) for t in self.grid.values],
            "per_t": list(self.records()),
            "agree_at_all_t": self.agree_at_all_t,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _soft_sign(x: np.ndarray) -> np.ndarray:
    return (x > _SIGN_TOL).astype(np.int8) - (x < -_SIGN_TOL).astype(np.int8)


def compare_models(data_a: Dataset, data_b: Dataset,
                   grid: ThresholdGrid) -> ComparisonReport:
    """Score two models over the same population at every grid threshold.

    The datasets must have identical priors (the comparison is otherwise
    ill-posed); their sizes may differ. Grid values must stay below 1
    because the dca weighting is undefined there.
    """
    if data_a.n_p * data_b.n != data_b.n_p * data_a.n:
        raise PriorMismatchError(
            f"class priors differ: {data_a.n_p}/{data_a.n} vs {data_b.n_p}/{data_b.n}")
    priors = data_a.priors
    nb_a = decision_curve(data_a, grid).ys
    nb_b = decision_curve(data_b, grid).ys
    bc_a = brier_curve(data_a, grid).ys
    bc_b = brier_curve(data_b, grid).ys
    delta_nb = nb_a - nb_b
    delta_bc = bc_a - bc_b
    agree = _soft_sign(delta_nb) == -_soft_sign(delta_bc)
    return ComparisonReport(grid=grid, priors=priors, nb_a=nb_a, nb_b=nb_b,
                            bc_a=bc_a, bc_b=bc_b, delta_nb=delta_nb,
                            delta_bc=delta_bc, agree=agree)


def envelope_oracle(points: RocCurve | Sequence[OperatingPoint], priors: Priors,
                    grid: ThresholdGrid, which: str,
                    scheme: UtilityScheme | None = None) -> Curve:
    """Brute-force envelope over EVERY operating point, not just the hull.

    which is "upper_decision" (max net benefit per grid t) or "lower_cost"
    (min normalized loss per grid c). This exists as an independent check
    of the hull-based envelopes; it never looks at convexity.
    """
    pts = list(points.points) if isinstance(points, RocCurve) else list(points)
    if not pts:
        raise ValueError("oracle needs at least one operating point")
    if which not in ("upper_decision", "lower_cost"):
        raise ValueError(f"unknown envelope kind {which!r}")
    tprs = np.array([p.tpr for p in pts])
    fprs = np.array([p.fpr for p in pts])
    xs = grid.values
    best = np.full(xs.size, np.inf if which == "lower_cost" else -np.inf)
    for start in range(0, tprs.size, _CHUNK):
        tp = tprs[start:start + _CHUNK, None]
        fp = fprs[start:start + _CHUNK, None]
        if which == "upper_decision":
            vals = net_benefit(tp, fp, priors, xs, scheme)
            best = np.maximum(best, np.max(vals, axis=0))
        else:
            vals = loss_cp(tp, fp, priors, xs)
            best = np.minimum(best, np.min(vals, axis=0))
    series = "upper_envelope" if which == "upper_decision" else "lower_envelope"
    return Curve(xs=xs, ys=best, series=series, priors=priors)
