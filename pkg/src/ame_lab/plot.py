"""Minimal SVG line charts for sweep results.

One polyline per (state, grid point, m) group; x is the subset's position in
lexicographic order, y the chosen measure.
"""
from __future__ import annotations

import math
from html import escape

from .partitions import SweepResult, SweepRow

WIDTH, HEIGHT = 720, 440
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 190, 40, 60

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
)
MEASURE_LABELS = {
    "logneg": "logarithmic negativity [ebit]",
    "coh_ab": "coherent information I(A>B) [bit]",
    "coh_ba": "coherent information I(B>A) [bit]",
    "coh_max": "coherent information (max) [bit]",
}


def _n(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi - lo < 1e-12:
        lo, hi = lo - 0.5, hi + 0.5
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw), default=10 * mag)
    start = math.floor(lo / step) * step
    ticks = []
    t = start
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 12))
        t += step
    if ticks[-1] < hi:
        ticks.append(round(t, 12))
    return ticks


def _group_label(row: SweepRow, several_states: bool) -> str:
    params = ", ".join(f"{k}={v:g}" for k, v in row.params.items())
    prefix = f"{row.state} " if several_states else ""
    return f"{prefix}{params}, m={row.m}"


def render_svg(result: SweepResult, measure: str = "logneg", title: str | None = None) -> str:
    groups: dict[tuple, list[SweepRow]] = {}
    for row in result.rows:
        if row.error is None:
            groups.setdefault((row.state, row.point_key(), row.m), []).append(row)
    several_states = len({k[0] for k in groups}) > 1
    ys = [r.value(measure) for rows in groups.values() for r in rows]
    if not ys:
        ys = [0.0]
    xmax = max((len(rows) for rows in groups.values()), default=1)
    yticks = _nice_ticks(min(ys), max(ys))
    y0, y1 = yticks[0], yticks[-1]
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def sx(i: int) -> float:
        return MARGIN_L + (pw * (i - 1) / (xmax - 1) if xmax > 1 else pw / 2)

    def sy(v: float) -> float:
        return MARGIN_T + ph * (1 - (v - y0) / (y1 - y0))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.0f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    # axes
    xa, ya = MARGIN_L, MARGIN_T + ph
    out.append(f'<line x1="{xa}" y1="{ya}" x2="{xa + pw}" y2="{ya}" stroke="black"/>')
    out.append(f'<line x1="{xa}" y1="{MARGIN_T}" x2="{xa}" y2="{ya}" stroke="black"/>')
    for t in yticks:
        y = sy(t)
        out.append(f'<line x1="{xa - 5}" y1="{_n(y)}" x2="{xa}" y2="{_n(y)}" stroke="black"/>')
        out.append(f'<line x1="{xa}" y1="{_n(y)}" x2="{xa + pw}" y2="{_n(y)}" stroke="#e0e0e0"/>')
        out.append(f'<text x="{xa - 8}" y="{_n(y + 4)}" text-anchor="end">{t:g}</text>')
    for i in range(1, xmax + 1):
        x = sx(i)
        out.append(f'<line x1="{_n(x)}" y1="{ya}" x2="{_n(x)}" y2="{ya + 5}" stroke="black"/>')
        out.append(f'<text x="{_n(x)}" y="{ya + 18}" text-anchor="middle">{i}</text>')
    out.append(
        f'<text x="{xa + pw / 2:.0f}" y="{HEIGHT - 15}" text-anchor="middle">subset index</text>'
    )
    out.append(
        f'<text transform="translate(18 {MARGIN_T + ph / 2:.0f}) rotate(-90)" '
        f'text-anchor="middle">{escape(MEASURE_LABELS.get(measure, measure))}</text>'
    )
    for k, (key, rows) in enumerate(groups.items()):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{_n(sx(i))},{_n(sy(r.value(measure)))}" for i, r in enumerate(rows, 1))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        for i, r in enumerate(rows, 1):
            out.append(
                f'<circle cx="{_n(sx(i))}" cy="{_n(sy(r.value(measure)))}" r="3" fill="{color}">'
                f'<title>{escape(r.state)} A={"-".join(map(str, r.subset))}: {r.value(measure):.6g}</title></circle>'
            )
        ly = MARGIN_T + 10 + 16 * k
        lx = WIDTH - MARGIN_R + 15
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}">{escape(_group_label(rows[0], several_states))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
