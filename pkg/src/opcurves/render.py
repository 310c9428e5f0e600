"""Deterministic SVG rendering for curves and reference lines.

No plotting dependency: the writer emits plain SVG 1.1 text and the same
PlotSpec always produces byte-identical output, so rendered files can be
diffed and cached. Series data may be a sampled Curve, a CostLine or a
RocLine; lines are drawn across the x range and everything is clipped to
the axes box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, floor, isfinite, log10
from typing import Union

import numpy as np

from .cost import CostLine
from .decision import Curve
from .isometrics import RocLine

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f")

_MARGIN_LEFT = 58
_MARGIN_RIGHT = 168
_MARGIN_TOP = 42
_MARGIN_BOTTOM = 52

PlotData = Union[Curve, CostLine, RocLine]


class RenderError(ValueError):
    """The plot spec cannot be rendered faithfully."""


@dataclass(frozen=True)
class SeriesStyle:
    color: str | None = None     # palette slot by position when None
    width: float = 1.6
    dash: str | None = None      # SVG dasharray, e.g. "6,3"


@dataclass(frozen=True)
class PlotSeries:
    data: PlotData
    label: str = ""              # derived from the data when empty
    style: SeriesStyle = field(default_factory=SeriesStyle)


@dataclass(frozen=True)
class PlotSpec:
    title: str
    x_label: str
    y_label: str
    series: tuple[PlotSeries, ...]
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    width: int = 720
    height: int = 480

    def __post_init__(self) -> None:
        object.__setattr__(self, "series", tuple(self.series))


def _escape(text: str) -> str:
    return (str(text).replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _default_label(data: PlotData) -> str:
    if isinstance(data, Curve):
        return data.series
    if isinstance(data, CostLine):
        src = data.source
        return f"line fpr={src.fpr:g} tpr={src.tpr:g}"
    if isinstance(data, RocLine):
        tag = f"{data.metric}={data.level:g}"
        return tag if data.t is None else f"{tag} t={data.t:g}"
    raise RenderError(f"cannot plot object of type {type(data).__name__}")


def _series_vertices(entry: PlotSeries, label: str,
                     x_range: tuple[float, float]) -> tuple[np.ndarray, np.ndarray]:
    data = entry.data
    if isinstance(data, Curve):
        xs, ys = data.xs, data.ys
    elif isinstance(data, CostLine):
        xs = np.array(x_range, dtype=np.float64)
        ys = data.value_at(xs)
    elif isinstance(data, RocLine):
        xs = np.array(x_range, dtype=np.float64)
        ys = data.tpr_at(xs)
    else:
        raise RenderError(f"cannot plot object of type {type(data).__name__}")
    bad = ~np.isfinite(np.asarray(ys))
    if np.any(bad):
        x_bad = float(np.asarray(xs)[bad][0])
        raise RenderError(f"series {label!r} has a non-finite value at x={x_bad!r}")
    return np.asarray(xs, dtype=np.float64), np.asarray(ys, dtype=np.float64)


def _clip_segment(x1: float, y1: float, x2: float, y2: float,
                  box: tuple[float, float, float, float]):
    """Liang-Barsky clip of one segment to the box; None when fully outside."""
    xmin, xmax, ymin, ymax = box
    dx, dy = x2 - x1, y2 - y1
    t0, t1 = 0.0, 1.0
    for p, q in ((-dx, x1 - xmin), (dx, xmax - x1),
                 (-dy, y1 - ymin), (dy, ymax - y1)):
        if p == 0.0:
            if q < 0.0:
                return None
        else:
            r = q / p
            if p < 0.0:
                t0 = max(t0, r)
            else:
                t1 = min(t1, r)
    if t0 > t1:
        return None
    return (x1 + t0 * dx, y1 + t0 * dy, x1 + t1 * dx, y1 + t1 * dy)


def _ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    span = hi - lo
    raw = span / target
    mag = 10.0 ** floor(log10(raw))
    step = next(m * mag for m in (1.0, 2.0, 2.5, 5.0, 10.0) if m * mag >= raw)
    first = ceil(lo / step - 1e-9)
    out = []
    k = first
    while k * step <= hi + 1e-9 * span:
        out.append(round(k * step, 10))
        k += 1
    return out


def render_svg(spec: PlotSpec) -> str:
    """Render the spec to SVG text. Raises RenderError on an empty series
    list, unusable ranges, or non-finite curve values."""
    if not spec.series:
        raise RenderError("nothing to plot: series list is empty")
    x0, x1 = spec.x_range
    y0, y1 = spec.y_range
    if not all(isfinite(v) for v in (x0, x1, y0, y1)) or x0 >= x1 or y0 >= y1:
        raise RenderError("plot ranges must be finite and increasing")
    if spec.width < 160 or spec.height < 120:
        raise RenderError("plot size is too small to draw axes")

    pw = spec.width - _MARGIN_LEFT - _MARGIN_RIGHT
    ph = spec.height - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return _MARGIN_TOP + (y1 - y) / (y1 - y0) * ph

    lines: list[str] = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">')
    lines.append(f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>')
    lines.append(
        f'<text x="{_fmt(_MARGIN_LEFT + pw / 2)}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15" fill="#222222">{_escape(spec.title)}</text>')

    for tx in _ticks(x0, x1):
        gx = _fmt(px(tx))
        lines.append(f'<line x1="{gx}" y1="{_MARGIN_TOP}" x2="{gx}" '
                     f'y2="{_MARGIN_TOP + ph}" stroke="#e3e3e3" stroke-width="1"/>')
        lines.append(f'<text x="{gx}" y="{_MARGIN_TOP + ph + 18}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11" fill="#444444">{tx:g}</text>')
    for ty in _ticks(y0, y1):
        gy = _fmt(py(ty))
        lines.append(f'<line x1="{_MARGIN_LEFT}" y1="{gy}" x2="{_MARGIN_LEFT + pw}" '
                     f'y2="{gy}" stroke="#e3e3e3" stroke-width="1"/>')
        lines.append(f'<text x="{_MARGIN_LEFT - 7}" y="{gy}" text-anchor="end" dy="4" '
                     f'font-family="sans-serif" font-size="11" fill="#444444">{ty:g}</text>')

    lines.append(f'<rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" width="{pw}" height="{ph}" '
                 f'fill="none" stroke="#333333" stroke-width="1"/>')
    lines.append(f'<text x="{_fmt(_MARGIN_LEFT + pw / 2)}" y="{spec.height - 12}" '
                 f'text-anchor="middle" font-family="sans-serif" font-size="13" '
                 f'fill="#222222">{_escape(spec.x_label)}</text>')
    ylab_x, ylab_y = 17, _MARGIN_TOP + ph / 2
    lines.append(f'<text x="{ylab_x}" y="{_fmt(ylab_y)}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="13" fill="#222222" '
                 f'transform="rotate(-90 {ylab_x} {_fmt(ylab_y)})">{_escape(spec.y_label)}</text>')

    box = (x0, x1, y0, y1)
    legend: list[tuple[str, str, SeriesStyle]] = []
    for idx, entry in enumerate(spec.series):
        label = entry.label or _default_label(entry.data)
        color = entry.style.color or PALETTE[idx % len(PALETTE)]
        xs, ys = _series_vertices(entry, label, spec.x_range)
        parts: list[str] = []
        prev_end: tuple[float, float] | None = None
        for i in range(xs.size - 1):
            seg = _clip_segment(float(xs[i]), float(ys[i]),
                                float(xs[i + 1]), float(ys[i + 1]), box)
            if seg is None:
                prev_end = None
                continue
            ax, ay, bx, by = seg
            if prev_end == (ax, ay):
                parts.append(f"L {_fmt(px(bx))} {_fmt(py(by))}")
            else:
                parts.append(f"M {_fmt(px(ax))} {_fmt(py(ay))} L {_fmt(px(bx))} {_fmt(py(by))}")
            prev_end = (bx, by)
        if parts:
            dash = f' stroke-dasharray="{entry.style.dash}"' if entry.style.dash else ""
            lines.append(f'<path d="{" ".join(parts)}" fill="none" stroke="{color}" '
                         f'stroke-width="{entry.style.width:g}"{dash}/>')
        legend.append((label, color, entry.style))

    lx = _MARGIN_LEFT + pw + 16
    for row, (label, color, style) in enumerate(legend):
        ly = _MARGIN_TOP + 14 + row * 20
        dash = f' stroke-dasharray="{style.dash}"' if style.dash else ""
        lines.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 26}" y2="{ly}" '
                     f'stroke="{color}" stroke-width="{style.width:g}"{dash}/>')
        lines.append(f'<text x="{lx + 32}" y="{ly}" dy="4" font-family="sans-serif" '
                     f'font-size="11" fill="#222222">{_escape(label)}</text>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(spec: PlotSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_svg(spec))
