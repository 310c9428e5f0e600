"""Isometric lines: where in ROC space a metric is constant.

Accuracy, net benefit and Brier loss are all linear in (FPR, TPR), so
each level set is a straight line. Accuracy's slope depends only on the
class balance; net benefit and Brier loss share a slope that depends on
the threshold too. Laying a fan of isometrics over an ROC plot shows at
a glance which operating points reach a given metric level.
"""

from pathlib import Path

import numpy as np

from opcurves import (PlotSeries, PlotSpec, Priors, SeriesStyle, isometric_gradient,
                      isometric_line, write_svg)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

priors = Priors(pi_p=0.25, pi_n=0.75)

print(f"priors: {priors.pi_p:.2f} positive")
print(f"accuracy isometric slope: {priors.pi_n / priors.pi_p:.2f} "
      "(steep: false alarms are plentiful, so accuracy punishes them)")
for t in (0.1, 0.25, 0.5):
    print(f"net-benefit/Brier slope at t={t}: "
          f"{isometric_gradient(t, priors):.3f}")
print("the slope is 1 exactly at t = prevalence, where both error "
      "types trade off evenly")

acc_lines = tuple(
    PlotSeries(data=isometric_line("accuracy", level, priors),
               style=SeriesStyle(color="#888888", dash="4,3"))
    for level in (0.7, 0.8, 0.9))
nb_lines = tuple(
    PlotSeries(data=isometric_line("net_benefit", level, priors, t=0.25))
    for level in (0.0, 0.1, 0.2))

spec = PlotSpec(
    title="Metric isometrics in ROC space",
    x_label="false positive rate",
    y_label="true positive rate",
    series=acc_lines + nb_lines,
    x_range=(0.0, 1.0),
    y_range=(0.0, 1.0),
)
write_svg(spec, str(OUT / "isometrics.svg"))
print(f"wrote {OUT / 'isometrics.svg'}")

# the brier_loss isometric through a point reports that point's loss
line = isometric_line("brier_loss", 0.2, priors, t=0.25)
fpr = 0.3
print(f"\nbrier_loss=0.2 isometric at t=0.25 passes through "
      f"(fpr={fpr}, tpr={line.tpr_at(fpr):.3f})")
