"""Hand-written SVG of a box-counting log-log plot.

Output depends only on the input numbers: coordinates are printed with fixed
precision and no timestamps or ids are embedded, so identical series give
byte-identical files.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from archgeom.boxcount import BoxCountSeries, fit_dimension

WIDTH, HEIGHT = 640, 480
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 72, 24, 48, 64
MAX_TICKS = 12


def nice_ticks(lo: float, hi: float, max_ticks: int = MAX_TICKS) -> list[float]:
    """Round tick values covering ``[lo, hi]``, at most ``max_ticks`` of them."""
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    for exp in range(math.floor(math.log10(span)) - 2, math.floor(math.log10(span)) + 3):
        for mult in (1, 2, 5):
            step = mult * 10.0 ** exp
            first = math.ceil(lo / step - 1e-9)
            last = math.floor(hi / step + 1e-9)
            if 2 <= last - first + 1 <= max_ticks:
                return [round(k * step, 10) for k in range(first, last + 1)]
    return [lo, hi]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(series: BoxCountSeries) -> str:
    if len(series.records) < 2:
        raise ValueError("need at least two records to plot")
    x = -np.log(series.deltas)
    y = np.log(series.counts.astype(float))
    slope = fit_dimension(series)
    intercept = float(y.mean() - slope * x.mean())

    pad_x = 0.05 * max(float(x.max() - x.min()), 1e-9)
    pad_y = 0.05 * max(float(y.max() - y.min()), 1e-9)
    x_lo, x_hi = float(x.min()) - pad_x, float(x.max()) + pad_x
    y_lo, y_hi = float(y.min()) - pad_y, float(y.max()) + pad_y
    xticks = [t for t in nice_ticks(x_lo, x_hi) if x_lo <= t <= x_hi]
    yticks = [t for t in nice_ticks(y_lo, y_hi) if y_lo <= t <= y_hi]

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(v):
        return MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v):
        return MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h

    title = "box counting" + (f": {series.image_id}" if series.image_id else "")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{escape(title)}</text>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>',
    ]
    for t in xticks:
        X = _fmt(px(t))
        out.append(f'<line x1="{X}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{X}" '
                   f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="black"/>')
        out.append(f'<text x="{X}" y="{HEIGHT - MARGIN_BOTTOM + 20}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">{_tick_label(t)}</text>')
    for t in yticks:
        Y = _fmt(py(t))
        out.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{Y}" x2="{MARGIN_LEFT}" y2="{Y}" stroke="black"/>')
        out.append(f'<text x="{MARGIN_LEFT - 8}" y="{Y}" text-anchor="end" dominant-baseline="middle" '
                   f'font-family="sans-serif" font-size="11">{_tick_label(t)}</text>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 16}" text-anchor="middle" '
               'font-family="sans-serif" font-size="13">-ln(delta)</text>')
    out.append(f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13" '
               f'transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.2f})">ln N(delta)</text>')

    fx = (x_lo, x_hi)
    out.append(f'<line x1="{_fmt(px(fx[0]))}" y1="{_fmt(py(intercept + slope * fx[0]))}" '
               f'x2="{_fmt(px(fx[1]))}" y2="{_fmt(py(intercept + slope * fx[1]))}" '
               'stroke="#c0392b" stroke-width="1.5"/>')
    for xv, yv in zip(x, y):
        out.append(f'<circle cx="{_fmt(px(xv))}" cy="{_fmt(py(yv))}" r="4" fill="#1f4e79"/>')
    out.append(f'<text x="{MARGIN_LEFT + 12}" y="{MARGIN_TOP + 20}" font-family="sans-serif" '
               f'font-size="14">slope = {slope:.3f}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
