"""Deterministic SVG rendering of result tables.

Data-faithful, dependency-free plots: grid sweeps are drawn as one
polyline+markers per encoding dimension m (Schmidt number K against the
window size s), loss tables as the loss Δ = m − mean_K against m.  Error
bars are vertical ±std segments; when a table carries an analytic column it
is overlaid as a dashed curve.  Output is a pure function of the table, so
re-rendering the same data yields byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

from .errors import EntruncError
from .results import ResultRow, ResultTable

__all__ = ["render_svg", "emit_plot"]

WIDTH, HEIGHT = 640, 440
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 64, 18, 30, 48

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)


def _px(value: float) -> str:
    return f"{value:.2f}"


class _Axes:
    """Linear data-to-pixel mapping with padded ranges."""

    def __init__(self, xs: list[float], ys: list[float]) -> None:
        self.xmin, self.xmax = _padded(min(xs), max(xs))
        self.ymin, self.ymax = _padded(min(ys), max(ys))

    def x(self, v: float) -> float:
        span = self.xmax - self.xmin
        return MARGIN_LEFT + (v - self.xmin) / span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)

    def y(self, v: float) -> float:
        span = self.ymax - self.ymin
        return HEIGHT - MARGIN_BOTTOM - (v - self.ymin) / span * (
            HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
        )


def _padded(lo: float, hi: float) -> tuple[float, float]:
    if hi <= lo:
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _series_svg(xs, ys, errs, color: str) -> list[str]:
    parts = []
    for x, y, err in zip(xs, ys, errs):
        if err:
            parts.append(
                f'<line x1="{_px(x)}" y1="{_px(y - err)}" x2="{_px(x)}" y2="{_px(y + err)}" '
                f'stroke="{color}" stroke-width="1"/>'
            )
    if len(xs) > 1:
        points = " ".join(f"{_px(x)},{_px(y)}" for x, y in zip(xs, ys))
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{_px(x)}" cy="{_px(y)}" r="3" fill="{color}"/>')
    return parts


def _dashed_svg(xs, ys, color: str) -> list[str]:
    if len(xs) < 2:
        return []
    points = " ".join(f"{_px(x)},{_px(y)}" for x, y in zip(xs, ys))
    return [
        f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1" '
        'stroke-dasharray="5,3"/>'
    ]


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _frame_svg(axes: _Axes, x_label: str, y_label: str, title: str) -> list[str]:
    x0, x1 = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    y0, y1 = HEIGHT - MARGIN_BOTTOM, MARGIN_TOP
    parts = [
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black" stroke-width="1"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black" stroke-width="1"/>',
    ]
    for v in _ticks(axes.xmin, axes.xmax):
        px = axes.x(v)
        parts.append(
            f'<line x1="{_px(px)}" y1="{y0}" x2="{_px(px)}" y2="{y0 + 5}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_px(px)}" y="{y0 + 18}" font-size="11" text-anchor="middle">{v:.4g}</text>'
        )
    for v in _ticks(axes.ymin, axes.ymax):
        py = axes.y(v)
        parts.append(
            f'<line x1="{x0 - 5}" y1="{_px(py)}" x2="{x0}" y2="{_px(py)}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x0 - 8}" y="{_px(py + 4)}" font-size="11" text-anchor="end">{v:.4g}</text>'
        )
    parts.append(
        f'<text x="{(x0 + x1) // 2}" y="{HEIGHT - 10}" font-size="13" text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="16" y="{(y0 + y1) // 2}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {(y0 + y1) // 2})">{y_label}</text>'
    )
    parts.append(
        f'<text x="{(x0 + x1) // 2}" y="18" font-size="13" text-anchor="middle">{title}</text>'
    )
    return parts


def _loss_view(rows: tuple[ResultRow, ...]):
    xs = [float(r.m) for r in rows]
    ys = [r.m - r.mean_K for r in rows]
    errs = [r.std_K or 0.0 for r in rows]
    analytic = [r.m - r.analytic_K if r.analytic_K is not None else None for r in rows]
    return xs, ys, errs, analytic


def render_svg(table: ResultTable) -> str:
    if not table.rows:
        raise EntruncError("refusing to plot an empty result table")
    loss_mode = table.metadata.get("run_kind") == "loss"
    n = table.metadata.get("n", "?")
    kind = table.metadata.get("unitary_kind", "")
    body: list[str] = []
    if loss_mode:
        xs, ys, errs, analytic = _loss_view(table.rows)
        all_x, all_y = list(xs), [y + e for y, e in zip(ys, errs)] + [y - e for y, e in zip(ys, errs)]
        overlay = [a for a in analytic if a is not None]
        axes = _Axes(all_x, all_y + overlay)
        body += _series_svg([axes.x(v) for v in xs], [axes.y(v) for v in ys],
                            [e / (axes.ymax - axes.ymin) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) for e in errs],
                            PALETTE[0])
        if len(overlay) == len(analytic):
            body += _dashed_svg([axes.x(v) for v in xs], [axes.y(v) for v in analytic], "black")
        frame = _frame_svg(axes, "encoding dimension m", "entanglement loss",
                           f"loss at s = m, n={n}")
    else:
        groups: dict[int, list[ResultRow]] = {}
        for row in table.rows:
            groups.setdefault(row.m, []).append(row)
        all_x = [float(r.s) for r in table.rows]
        all_y = [r.mean_K + (r.std_K or 0.0) for r in table.rows]
        all_y += [r.mean_K - (r.std_K or 0.0) for r in table.rows]
        all_y += [r.analytic_K for r in table.rows if r.analytic_K is not None]
        axes = _Axes(all_x, all_y)
        scale = (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) / (axes.ymax - axes.ymin)
        for index, (m, rows) in enumerate(groups.items()):
            color = PALETTE[index % len(PALETTE)]
            xs = [axes.x(r.s) for r in rows]
            ys = [axes.y(r.mean_K) for r in rows]
            errs = [(r.std_K or 0.0) * scale for r in rows]
            body += _series_svg(xs, ys, errs, color)
            if all(r.analytic_K is not None for r in rows):
                body += _dashed_svg(xs, [axes.y(r.analytic_K) for r in rows], color)
            body.append(
                f'<text x="{WIDTH - MARGIN_RIGHT - 6}" y="{MARGIN_TOP + 16 + 15 * index}" '
                f'font-size="12" text-anchor="end" fill="{color}">m = {m}</text>'
            )
        frame = _frame_svg(axes, "truncation dimension s", "Schmidt number K",
                           f"{kind} sweep, n={n}")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        *frame,
        *body,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def emit_plot(table: ResultTable, path) -> None:
    """Render the table to an SVG file at ``path``."""
    svg = render_svg(table)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(svg)
