"""Command line front end.

Exit codes: 0 on success, 1 for usage problems (bad flags, bad grid
specs), 2 for data problems (unreadable or malformed input, degenerate
datasets). Curve exports are CSV with header x,y,series; JSON outputs
carry the priors and grid they were computed under, so they are
self-describing. Identical invocations write identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .cost import (baseline_cost_lines, brier_curve, cost_line, loss_decomposition,
                   lower_envelope)
from .dataset import (Dataset, DatasetError, Priors, SimulationSpec,
                      SimulationSpecError, read_csv, write_csv, simulate_gaussian)
from .decision import (Curve, ThresholdGrid, UtilityScheme, baseline_decision_curves,
                       decision_curve, upper_envelope_decision_curve)
from .isometrics import METRICS, isometric_line
from .relations import PriorMismatchError, compare_models
from .render import PlotSeries, PlotSpec, SeriesStyle, write_svg
from .roc import convex_hull, operating_points

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_DCA_GRID = "0:0.99:0.005"
_COST_GRID = "0:1:0.005"


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


@dataclass
class RunConfig:
    """Everything one invocation needs; produced by the arg parser."""

    command: str
    input: str | None = None
    input_b: str | None = None
    grid: ThresholdGrid | None = None
    scheme: UtilityScheme | None = None
    upper_envelope: bool = False
    csv_path: str | None = None
    svg_path: str | None = None
    json_path: str | None = None
    out_path: str | None = None
    n: int = 10000
    pi_p: float | None = None
    mu_n: float = 0.4
    sd_n: float = 0.12
    mu_p: float = 0.6
    sd_p: float = 0.12
    seed: int = 0
    metric: str | None = None
    levels: tuple[float, ...] = field(default_factory=tuple)
    t: float | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); remap to 1
        raise UsageError(message)


def _parse_grid(text: str) -> ThresholdGrid:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must look like start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"grid fields must be numbers, got {text!r}") from None
    try:
        return ThresholdGrid.regular(start, stop, step)
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None


def _threshold_grid(text: str) -> ThresholdGrid:
    grid = _parse_grid(text)
    if grid.values[-1] >= 1.0:
        raise UsageError("net benefit is undefined at t = 1; use a grid with stop < 1")
    return grid


def _parse_levels(text: str) -> tuple[float, ...]:
    if ":" in text:
        return tuple(float(v) for v in _parse_grid(text).values)
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"levels must be numbers or start:stop:step, got {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="opcurves",
                     description="Evaluate binary classifiers across operating conditions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="score,label CSV file")

    def add_outputs(p, *, csv=True, svg=True, js=False):
        if csv:
            p.add_argument("--csv", dest="csv_path", help="write curves as x,y,series CSV")
        if svg:
            p.add_argument("--svg", dest="svg_path", help="write an SVG plot")
        if js:
            p.add_argument("--json", dest="json_path", help="write a JSON report")

    p = sub.add_parser("dca", help="decision curves with baselines")
    add_input(p)
    p.add_argument("--grid", default=_DCA_GRID, help=f"threshold grid (default {_DCA_GRID})")
    p.add_argument("--scheme", choices=["dca", "brier_scaled"], default="dca")
    p.add_argument("--upper-envelope", action="store_true",
                   help="include the best-attainable envelope")
    add_outputs(p, js=True)

    p = sub.add_parser("cost", help="cost lines and their lower envelope")
    add_input(p)
    p.add_argument("--grid", default=_COST_GRID, help=f"cost proportion grid (default {_COST_GRID})")
    add_outputs(p)

    p = sub.add_parser("brier", help="Brier curve, envelope and loss decomposition")
    add_input(p)
    p.add_argument("--grid", default=_COST_GRID, help=f"threshold grid (default {_COST_GRID})")
    add_outputs(p, js=True)

    p = sub.add_parser("roc", help="operating points and convex hull")
    add_input(p)
    add_outputs(p)

    p = sub.add_parser("score", help="Brier score and its decomposition as JSON")
    add_input(p)
    add_outputs(p, csv=False, svg=False, js=True)

    p = sub.add_parser("compare", help="two models at every threshold, both spaces")
    p.add_argument("--input-a", required=True, dest="input")
    p.add_argument("--input-b", required=True, dest="input_b")
    p.add_argument("--grid", default=_DCA_GRID, help=f"threshold grid (default {_DCA_GRID})")
    add_outputs(p, csv=False, svg=False, js=True)

    p = sub.add_parser("isometrics", help="constant-metric line coefficients")
    p.add_argument("--metric", required=True, choices=list(METRICS))
    p.add_argument("--levels", required=True, help="comma list or start:stop:step")
    p.add_argument("--t", type=float, help="threshold for net_benefit/brier_loss")
    p.add_argument("--pi-p", type=float, dest="pi_p", help="positive prevalence")
    p.add_argument("--input", help="derive the prevalence from this CSV instead")
    p.add_argument("--csv", dest="csv_path", help="write coefficients CSV")

    p = sub.add_parser("simulate", help="draw a two-Gaussian dataset")
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--pi-p", type=float, default=0.2, dest="pi_p")
    p.add_argument("--mu-n", type=float, default=0.4, dest="mu_n")
    p.add_argument("--sd-n", type=float, default=0.12, dest="sd_n")
    p.add_argument("--mu-p", type=float, default=0.6, dest="mu_p")
    p.add_argument("--sd-p", type=float, default=0.12, dest="sd_p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, dest="out_path", help="output CSV path")

    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for name in vars(cfg):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    if cfg.command in ("dca", "compare"):
        cfg.grid = _threshold_grid(ns.grid)
    elif cfg.command in ("cost", "brier"):
        cfg.grid = _parse_grid(ns.grid)
    if cfg.command == "dca":
        cfg.scheme = (UtilityScheme.brier_scaled() if ns.scheme == "brier_scaled"
                      else UtilityScheme.dca())
    if cfg.command == "isometrics":
        cfg.levels = _parse_levels(ns.levels)
    return cfg


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {path}")


def _curves_csv(curves: list[Curve]) -> str:
    lines = ["x,y,series"]
    for c in curves:
        lines.extend(f"{float(x)!r},{float(y)!r},{c.series}"
                     for x, y in zip(c.xs, c.ys))
    return "\n".join(lines) + "\n"


def _series_json(curves: list[Curve]) -> list[dict]:
    return [{"series": c.series,
             "x": [float(v) for v in c.xs],
             "y": [float(v) for v in c.ys]} for c in curves]


def _report_scaffold(cfg: RunConfig, data: Dataset) -> dict:
    out = {"command": cfg.command,
           "input": cfg.input,
           "priors": {"pi_p": data.pi_p, "pi_n": data.pi_n}}
    if cfg.grid is not None:
        out["grid"] = [float(v) for v in cfg.grid.values]
    return out


def _line_curve(line, grid: ThresholdGrid, series: str, priors) -> Curve:
    return Curve(xs=grid.values, ys=line.value_at(grid.values),
                 series=series, priors=priors)


def _plot(path: str, title: str, x_label: str, y_label: str,
          entries: list[PlotSeries], x_range, y_range) -> None:
    write_svg(PlotSpec(title=title, x_label=x_label, y_label=y_label,
                       series=tuple(entries), x_range=x_range, y_range=y_range), path)
    print(f"wrote {path}")


def _run_dca(cfg: RunConfig) -> int:
    data = read_csv(cfg.input)
    curves = [decision_curve(data, cfg.grid, cfg.scheme)]
    curves.extend(baseline_decision_curves(data.priors, cfg.grid, cfg.scheme))
    if cfg.upper_envelope:
        hull = convex_hull(operating_points(data))
        curves.append(upper_envelope_decision_curve(hull, data.priors, cfg.grid, cfg.scheme))
    model = curves[0]
    peak = int(np.argmax(model.ys))
    print(f"model net benefit peaks at t={float(model.xs[peak]):.6g} "
          f"with value {float(model.ys[peak]):.6g}")
    if cfg.csv_path:
        _write_text(cfg.csv_path, _curves_csv(curves))
    if cfg.svg_path:
        ymax = max(float(np.max(c.ys)) for c in curves)
        y_range = (-0.15 * max(ymax, 1e-9), 1.08 * max(ymax, 1e-9))
        styles = {"model": SeriesStyle(), "treat_all": SeriesStyle(dash="6,3"),
                  "treat_none": SeriesStyle(dash="2,3"), "upper_envelope": SeriesStyle(width=2.2)}
        entries = [PlotSeries(data=c, style=styles.get(c.series, SeriesStyle()))
                   for c in curves]
        _plot(cfg.svg_path, "Decision curves", "threshold t", "net benefit",
              entries, (float(cfg.grid.values[0]), float(cfg.grid.values[-1])), y_range)
    if cfg.json_path:
        report = _report_scaffold(cfg, data)
        report["scheme"] = cfg.scheme.kind
        report["series"] = _series_json(curves)
        _write_text(cfg.json_path, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _run_cost(cfg: RunConfig) -> int:
    data = read_csv(cfg.input)
    hull = convex_hull(operating_points(data))
    priors = data.priors
    env = lower_envelope(hull, priors, cfg.grid)
    all_pos, all_neg = baseline_cost_lines(priors)
    curves = [env,
              _line_curve(all_pos, cfg.grid, "all_positive", priors),
              _line_curve(all_neg, cfg.grid, "all_negative", priors)]
    print(f"lower envelope peaks at {float(np.max(env.ys)):.6g} "
          f"over {len(hull.points)} hull points")
    if cfg.csv_path:
        _write_text(cfg.csv_path, _curves_csv(curves))
    if cfg.svg_path:
        entries = [PlotSeries(data=env, style=SeriesStyle(width=2.4))]
        entries.append(PlotSeries(data=curves[1], style=SeriesStyle(dash="6,3")))
        entries.append(PlotSeries(data=curves[2], style=SeriesStyle(dash="2,3")))
        grey = SeriesStyle(color="#b0b0b0", width=1.0)
        entries.extend(PlotSeries(data=cost_line(p, priors), style=grey)
                       for p in hull.points)
        ymax = max(max(float(np.max(c.ys)) for c in curves),
                   max(cost_line(p, priors).value_at(1.0) for p in hull.points))
        _plot(cfg.svg_path, "Cost curves", "cost proportion c", "normalized expected loss",
              entries, (0.0, 1.0), (0.0, 1.06 * max(ymax, 1e-9)))
    return EXIT_OK


def _run_brier(cfg: RunConfig) -> int:
    data = read_csv(cfg.input)
    priors = data.priors
    hull = convex_hull(operating_points(data))
    bc = brier_curve(data, cfg.grid)
    env = lower_envelope(hull, priors, cfg.grid)
    all_pos, all_neg = baseline_cost_lines(priors)
    curves = [bc, env,
              _line_curve(all_pos, cfg.grid, "all_positive", priors),
              _line_curve(all_neg, cfg.grid, "all_negative", priors)]
    dec = loss_decomposition(data, cfg.grid)
    print(f"brier_score={dec.brier_score:.6f} refinement={dec.refinement:.6f} "
          f"calibration={dec.calibration:.6f}")
    if cfg.csv_path:
        _write_text(cfg.csv_path, _curves_csv(curves))
    if cfg.svg_path:
        styles = {"brier": SeriesStyle(width=2.0), "lower_envelope": SeriesStyle(width=2.0),
                  "all_positive": SeriesStyle(dash="6,3"), "all_negative": SeriesStyle(dash="2,3")}
        entries = [PlotSeries(data=c, style=styles[c.series]) for c in curves]
        ymax = max(float(np.max(c.ys)) for c in curves)
        _plot(cfg.svg_path, "Brier curve", "cost proportion c = t", "normalized expected loss",
              entries, (float(cfg.grid.values[0]), float(cfg.grid.values[-1])),
              (0.0, 1.06 * max(ymax, 1e-9)))
    if cfg.json_path:
        report = _report_scaffold(cfg, data)
        report.update({"brier_score": dec.brier_score, "refinement_loss": dec.refinement,
                       "calibration_loss": dec.calibration, "series": _series_json(curves)})
        _write_text(cfg.json_path, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _run_roc(cfg: RunConfig) -> int:
    data = read_csv(cfg.input)
    curve = operating_points(data)
    hull = convex_hull(curve)
    print(f"{len(curve.points)} operating points, {len(hull.points)} on the hull, "
          f"hull area {hull.auc():.6f}")
    if cfg.csv_path:
        lines = ["x,y,series"]
        lines.extend(f"{float(p.fpr)!r},{float(p.tpr)!r},points" for p in curve.points)
        lines.extend(f"{float(p.fpr)!r},{float(p.tpr)!r},hull" for p in hull.points)
        _write_text(cfg.csv_path, "\n".join(lines) + "\n")
    if cfg.svg_path:
        priors = data.priors
        pts = Curve(xs=np.linspace(0, 1, 2), ys=np.linspace(0, 1, 2),
                    series="chance", priors=priors)
        ops = _staircase(curve, "points", priors)
        hull_c = _staircase(hull, "hull", priors)
        entries = [PlotSeries(data=ops),
                   PlotSeries(data=hull_c, style=SeriesStyle(width=2.2)),
                   PlotSeries(data=pts, style=SeriesStyle(color="#999999", dash="4,4"))]
        _plot(cfg.svg_path, "ROC", "false positive rate", "true positive rate",
              entries, (-0.02, 1.02), (-0.02, 1.02))
    return EXIT_OK


def _staircase(curve, series: str, priors) -> Curve:
    # nudge duplicate fpr values apart so the Curve container accepts them;
    # visually identical at plot resolution
    xs, ys = [], []
    for p in curve.points:
        x = p.fpr
        while xs and x <= xs[-1]:
            x = np.nextafter(xs[-1], 2.0)
        xs.append(x)
        ys.append(p.tpr)
    return Curve(xs=np.array(xs), ys=np.array(ys), series=series, priors=priors)


def _run_score(cfg: RunConfig) -> int:
    data = read_csv(cfg.input)
    dec = loss_decomposition(data, ThresholdGrid.cost_default())
    report = {"command": "score", "input": cfg.input, "n": data.n,
              "priors": {"pi_p": data.pi_p, "pi_n": data.pi_n},
              "brier_score": dec.brier_score,
              "refinement_loss": dec.refinement,
              "calibration_loss": dec.calibration}
    text = json.dumps(report, indent=2)
    print(text)
    if cfg.json_path:
        _write_text(cfg.json_path, text + "\n")
    return EXIT_OK


def _run_compare(cfg: RunConfig) -> int:
    data_a = read_csv(cfg.input)
    data_b = read_csv(cfg.input_b)
    report = compare_models(data_a, data_b, cfg.grid)
    if cfg.json_path:
        _write_text(cfg.json_path, report.to_json() + "\n")
        print(f"agree_at_all_t={str(report.agree_at_all_t).lower()}")
    else:
        print(report.to_json())
    return EXIT_OK


def _run_isometrics(cfg: RunConfig) -> int:
    if cfg.input is not None and cfg.pi_p is not None:
        raise UsageError("pass either --input or --pi-p, not both")
    if cfg.input is not None:
        priors = read_csv(cfg.input).priors
    elif cfg.pi_p is not None:
        if not 0.0 < cfg.pi_p < 1.0:
            raise UsageError("--pi-p must lie strictly inside (0, 1)")
        priors = Priors(pi_p=cfg.pi_p, pi_n=1.0 - cfg.pi_p)
    else:
        raise UsageError("isometrics needs --pi-p or --input for the prevalence")
    if cfg.metric == "accuracy" and cfg.t is not None:
        raise UsageError("accuracy isometrics take no --t")
    if cfg.metric != "accuracy" and cfg.t is None:
        raise UsageError(f"{cfg.metric} isometrics need --t")
    lines = ["metric,level,t,gradient,intercept"]
    for level in cfg.levels:
        ln = isometric_line(cfg.metric, float(level), priors, cfg.t)
        t_txt = "" if ln.t is None else repr(float(ln.t))
        lines.append(f"{ln.metric},{float(ln.level)!r},{t_txt},"
                     f"{float(ln.gradient)!r},{float(ln.intercept)!r}")
    text = "\n".join(lines) + "\n"
    if cfg.csv_path:
        _write_text(cfg.csv_path, text)
    else:
        print(text, end="")
    return EXIT_OK


def _run_simulate(cfg: RunConfig) -> int:
    spec = SimulationSpec(n=cfg.n, pi_p=cfg.pi_p if cfg.pi_p is not None else 0.2,
                          mu_n=cfg.mu_n, sigma_n=cfg.sd_n,
                          mu_p=cfg.mu_p, sigma_p=cfg.sd_p, seed=cfg.seed)
    data = simulate_gaussian(spec)
    write_csv(data, cfg.out_path)
    print(f"wrote {cfg.out_path} ({data.n} samples, {data.n_p} positive, seed {cfg.seed})")
    return EXIT_OK


_HANDLERS = {
    "dca": _run_dca,
    "cost": _run_cost,
    "brier": _run_brier,
    "roc": _run_roc,
    "score": _run_score,
    "compare": _run_compare,
    "isometrics": _run_isometrics,
    "simulate": _run_simulate,
}


def run(cfg: RunConfig) -> int:
    handler = _HANDLERS.get(cfg.command)
    if handler is None:
        raise UsageError(f"unknown command {cfg.command!r}")
    return handler(cfg)


def main(argv: list[str] | None = None) -> int:
    """Parse argv and run; returns the exit code instead of exiting."""
    try:
        return run(parse_config(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SimulationSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except PriorMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
