"""Hand-rolled SVG emission for the comparison and difference graphs.

No plotting library: output is deterministic text whose geometry tests can
recompute. Per (kind, dim) the comparison graph shows |error| against n on
log-log axes for both aggregation methods, with red vertical markers
spanning the gap at each sample size; the difference graph shows
|err(mean)| - |err(median)| on a linear axis around a zero reference line,
so "median wins" reads as "curve above zero".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .harness import ResultRow

WIDTH = 640
HEIGHT = 480
MARGIN_LEFT = 78
MARGIN_RIGHT = 22
MARGIN_TOP = 42
MARGIN_BOTTOM = 58

MEDIAN_COLOR = "#1f77b4"
MEAN_COLOR = "#ff7f0e"
MARKER_COLOR = "#d62728"
DIFF_COLOR = "#2ca02c"

# Plotted errors are clamped to this floor: a log axis cannot hold zero.
ERROR_FLOOR = 1e-17


@dataclass(frozen=True)
class LinearScale:
    lo: float
    hi: float
    px_lo: float
    px_hi: float

    def to_px(self, value: float) -> float:
        return self.px_lo + (value - self.lo) * (self.px_hi - self.px_lo) / (self.hi - self.lo)


def x_scale(log2n_lo: int, log2n_hi: int) -> LinearScale:
    """Horizontal scale: position is linear in log2(n), i.e. n on a log axis."""
    return LinearScale(log2n_lo, log2n_hi, MARGIN_LEFT, WIDTH - MARGIN_RIGHT)


def y_scale(lo: float, hi: float) -> LinearScale:
    """Vertical scale; SVG y grows downward, so hi maps to the top."""
    return LinearScale(lo, hi, HEIGHT - MARGIN_BOTTOM, MARGIN_TOP)


def _px(v: float) -> str:
    return format(v, ".2f")


def _polyline(points: list[tuple[float, float]], stroke: str, dashed: bool = False) -> str:
    pts = " ".join(f"{_px(x)},{_px(y)}" for x, y in points)
    dash = ' stroke-dasharray="7 4"' if dashed else ""
    return f'<polyline fill="none" stroke="{stroke}" stroke-width="2"{dash} points="{pts}"/>'


def _line(x1: float, y1: float, x2: float, y2: float, stroke: str, extra: str = "") -> str:
    return (f'<line x1="{_px(x1)}" y1="{_px(y1)}" x2="{_px(x2)}" y2="{_px(y2)}" '
            f'stroke="{stroke}"{extra}/>')


def _text(x: float, y: float, s: str, anchor: str = "middle", extra: str = "") -> str:
    return (f'<text x="{_px(x)}" y="{_px(y)}" font-family="sans-serif" font-size="12" '
            f'text-anchor="{anchor}"{extra}>{s}</text>')


def _frame_and_title(title: str) -> list[str]:
    return [
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{WIDTH - MARGIN_LEFT - MARGIN_RIGHT}" '
        f'height="{HEIGHT - MARGIN_TOP - MARGIN_BOTTOM}" fill="none" stroke="#333"/>',
        _text(WIDTH / 2, MARGIN_TOP - 14, title),
    ]


def _x_axis(sx: LinearScale, log2ns: list[int]) -> list[str]:
    parts = []
    step = 1 if len(log2ns) <= 12 else 2
    for i, m in enumerate(log2ns):
        px = sx.to_px(m)
        parts.append(_line(px, HEIGHT - MARGIN_BOTTOM, px, HEIGHT - MARGIN_BOTTOM + 5, "#333"))
        if i % step == 0:
            parts.append(_text(px, HEIGHT - MARGIN_BOTTOM + 20, f"2^{m}"))
    parts.append(_text((MARGIN_LEFT + WIDTH - MARGIN_RIGHT) / 2, HEIGHT - 14, "sample size n"))
    return parts


def _svg(elements: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">')
    return "\n".join([head, *elements, "</svg>"]) + "\n"


def comparison_svg(kind: str, dim: int, rows: list[ResultRow]) -> str:
    """Log-log error curves for both methods plus red per-size gap markers."""
    rows = sorted(rows, key=lambda r: r.log2n)
    log2ns = [r.log2n for r in rows]
    med = [math.log10(max(r.abs_err_median, ERROR_FLOOR)) for r in rows]
    mean = [math.log10(max(r.abs_err_mean, ERROR_FLOOR)) for r in rows]

    lo = math.floor(min(med + mean))
    hi = math.ceil(max(med + mean))
    if hi == lo:
        hi = lo + 1
    sx = x_scale(log2ns[0], log2ns[-1])
    sy = y_scale(lo, hi)

    parts = _frame_and_title(f"{kind} d={dim}: error vs sample size")
    parts += _x_axis(sx, log2ns)
    for decade in range(lo, hi + 1):
        py = sy.to_px(decade)
        parts.append(_line(MARGIN_LEFT - 5, py, MARGIN_LEFT, py, "#333"))
        parts.append(_text(MARGIN_LEFT - 8, py + 4, f"1e{decade:+03d}", anchor="end"))
    parts.append(_text(16, (MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2, "absolute error",
                       extra=f' transform="rotate(-90 16 {(MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2:.2f})"'))

    for m, y_med, y_mean in zip(log2ns, med, mean):
        px = sx.to_px(m)
        parts.append(_line(px, sy.to_px(y_med), px, sy.to_px(y_mean), MARKER_COLOR,
                           extra=' stroke-width="3" class="difference-marker"'))

    parts.append(_polyline([(sx.to_px(m), sy.to_px(v)) for m, v in zip(log2ns, med)],
                           MEDIAN_COLOR))
    parts.append(_polyline([(sx.to_px(m), sy.to_px(v)) for m, v in zip(log2ns, mean)],
                           MEAN_COLOR, dashed=True))

    lx = WIDTH - MARGIN_RIGHT - 190
    ly = MARGIN_TOP + 16
    parts.append(_line(lx, ly, lx + 28, ly, MEDIAN_COLOR, extra=' stroke-width="2"'))
    parts.append(_text(lx + 34, ly + 4, "median of means", anchor="start"))
    parts.append(_line(lx, ly + 18, lx + 28, ly + 18, MEAN_COLOR,
                       extra=' stroke-width="2" stroke-dasharray="7 4"'))
    parts.append(_text(lx + 34, ly + 22, "mean of means", anchor="start"))
    return _svg(parts)


def difference_svg(kind: str, dim: int, rows: list[ResultRow]) -> str:
    """|err(mean)| - |err(median)| on a linear axis with a zero reference line."""
    rows = sorted(rows, key=lambda r: r.log2n)
    log2ns = [r.log2n for r in rows]
    diffs = [r.diff for r in rows]

    span = max(max(abs(v) for v in diffs), 1e-17)
    lo = min(min(diffs), 0.0) - 0.1 * span
    hi = max(max(diffs), 0.0) + 0.1 * span
    sx = x_scale(log2ns[0], log2ns[-1])
    sy = y_scale(lo, hi)

    parts = _frame_and_title(f"{kind} d={dim}: error gap (mean minus median)")
    parts += _x_axis(sx, log2ns)
    for frac in (0.0, 0.5, 1.0):
        v = lo + frac * (hi - lo)
        py = sy.to_px(v)
        parts.append(_line(MARGIN_LEFT - 5, py, MARGIN_LEFT, py, "#333"))
        parts.append(_text(MARGIN_LEFT - 8, py + 4, format(v, ".2e"), anchor="end"))
    parts.append(_text(16, (MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2, "|err(mean)| - |err(median)|",
                       extra=f' transform="rotate(-90 16 {(MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2:.2f})"'))

    zero_py = sy.to_px(0.0)
    parts.append(_line(MARGIN_LEFT, zero_py, WIDTH - MARGIN_RIGHT, zero_py, "#888",
                       extra=' stroke-dasharray="4 4" id="zero-line"'))
    parts.append(_polyline([(sx.to_px(m), sy.to_px(v)) for m, v in zip(log2ns, diffs)],
                           DIFF_COLOR))
    return _svg(parts)


def emit_plots(rows: list[ResultRow], outdir: str | Path) -> list[Path]:
    """Write one comparison and one difference SVG per (kind, dim) present."""
    groups: dict[tuple[str, int], list[ResultRow]] = {}
    for row in rows:
        groups.setdefault((row.pointset_kind, row.dim), []).append(row)
    for (kind, dim), group in sorted(groups.items()):
        if len({r.log2n for r in group}) < 2:
            raise ValueError(
                f"need at least 2 sample sizes to plot (pointset={kind}, dim={dim})"
            )
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for (kind, dim), group in sorted(groups.items()):
        for suffix, render in (("comparison", comparison_svg), ("difference", difference_svg)):
            path = out / f"{kind}_d{dim}_{suffix}.svg"
            path.write_text(render(kind, dim, group), encoding="utf-8", newline="\n")
            written.append(path)
    return written
