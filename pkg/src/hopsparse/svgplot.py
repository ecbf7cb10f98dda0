"""Minimal self-contained SVG charts: no external assets, no plotting stack.

Two chart types cover the experiment outputs: a multi-series line chart
(MSE versus measurement fraction) and a stem chart (coefficient magnitudes
or sample values against index).
"""

import math
from dataclasses import dataclass
from datetime import datetime, timezone

WIDTH, HEIGHT = 760, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 40, 50

DFT_COLOR = "#cc0000"      # red, matching the reference figure convention
HERMITE_COLOR = "#0033cc"  # blue


@dataclass(frozen=True)
class Series:
    label: str
    x: list[float]
    y: list[float]
    color: str


def _nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-12 * step:
        ticks.append(0.0 if abs(t) < step * 1e-9 else t)
        t += step
    return ticks


def _fmt_tick(v: float) -> str:
    return f"{v:g}"


class _Canvas:
    def __init__(self, title: str, timestamp: bool):
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
        ]
        if timestamp:
            now = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
            self.parts.append(f"<!-- generated {now} -->")
        self.parts.append(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
            f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
        )
        self.parts.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
        self.parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{_escape(title)}</text>'
        )

    def add(self, fragment: str) -> None:
        self.parts.append(fragment)

    def finish(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


class _Axes:
    """Maps data coordinates onto the plot viewport and draws the frame."""

    def __init__(self, x_range, y_range, log_y: bool):
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        self.log_y = log_y
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 == self.y0:
            self.y1 = self.y0 + 1.0

    def px(self, x: float) -> float:
        frac = (x - self.x0) / (self.x1 - self.x0)
        return MARGIN_L + frac * (WIDTH - MARGIN_L - MARGIN_R)

    def py(self, y: float) -> float:
        if self.log_y:
            y, y0, y1 = math.log10(y), math.log10(self.y0), math.log10(self.y1)
        else:
            y0, y1 = self.y0, self.y1
        frac = (y - y0) / (y1 - y0)
        return HEIGHT - MARGIN_B - frac * (HEIGHT - MARGIN_T - MARGIN_B)

    def draw(self, canvas: _Canvas, xlabel: str, ylabel: str) -> None:
        left, right = MARGIN_L, WIDTH - MARGIN_R
        top, bottom = MARGIN_T, HEIGHT - MARGIN_B
        canvas.add(
            f'<rect x="{left}" y="{top}" width="{right - left}" '
            f'height="{bottom - top}" fill="none" stroke="black"/>'
        )
        for t in _nice_ticks(self.x0, self.x1):
            px = self.px(t)
            canvas.add(f'<line x1="{px:.2f}" y1="{bottom}" x2="{px:.2f}" y2="{bottom + 5}" stroke="black"/>')
            canvas.add(
                f'<text x="{px:.2f}" y="{bottom + 20}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="11">{_fmt_tick(t)}</text>'
            )
        for t in self._y_ticks():
            py = self.py(t)
            canvas.add(f'<line x1="{left - 5}" y1="{py:.2f}" x2="{left}" y2="{py:.2f}" stroke="black"/>')
            canvas.add(
                f'<text x="{left - 8}" y="{py + 4:.2f}" text-anchor="end" '
                f'font-family="sans-serif" font-size="11">{_fmt_tick(t)}</text>'
            )
        canvas.add(
            f'<text x="{(left + right) / 2:.1f}" y="{HEIGHT - 12}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{_escape(xlabel)}</text>'
        )
        canvas.add(
            f'<text x="18" y="{(top + bottom) / 2:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" '
            f'transform="rotate(-90 18 {(top + bottom) / 2:.1f})">{_escape(ylabel)}</text>'
        )

    def _y_ticks(self) -> list[float]:
        if not self.log_y:
            return _nice_ticks(self.y0, self.y1)
        lo = math.floor(math.log10(self.y0))
        hi = math.ceil(math.log10(self.y1))
        return [10.0**e for e in range(lo, hi + 1)]


def render_line_chart(
    series: list[Series],
    title: str,
    xlabel: str,
    ylabel: str,
    log_y: bool = False,
    timestamp: bool = True,
) -> str:
    """Multi-series line chart with markers and a legend."""
    xs = [v for s in series for v in s.x]
    ys = [v for s in series for v in s.y]
    if log_y:
        floor = 1e-300
        ys = [max(v, floor) for v in ys]
        series = [Series(s.label, s.x, [max(v, floor) for v in s.y], s.color) for s in series]
    canvas = _Canvas(title, timestamp)
    pad = 0.05 * (max(xs) - min(xs)) if max(xs) > min(xs) else 0.5
    if log_y:
        axes = _Axes((min(xs) - pad, max(xs) + pad), (min(ys) / 2, max(ys) * 2), True)
    else:
        spread = (max(ys) - min(ys)) or 1.0
        axes = _Axes(
            (min(xs) - pad, max(xs) + pad),
            (min(ys) - 0.05 * spread, max(ys) + 0.05 * spread),
            False,
        )
    axes.draw(canvas, xlabel, ylabel)
    for s in series:
        points = " ".join(f"{axes.px(x):.2f},{axes.py(y):.2f}" for x, y in zip(s.x, s.y))
        canvas.add(
            f'<polyline points="{points}" fill="none" stroke="{s.color}" stroke-width="1.8"/>'
        )
        for x, y in zip(s.x, s.y):
            canvas.add(
                f'<circle cx="{axes.px(x):.2f}" cy="{axes.py(y):.2f}" r="3" fill="{s.color}"/>'
            )
    for i, s in enumerate(series):
        lx, ly = WIDTH - MARGIN_R - 150, MARGIN_T + 16 + 18 * i
        canvas.add(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 26}" y2="{ly - 4}" stroke="{s.color}" stroke-width="1.8"/>')
        canvas.add(
            f'<text x="{lx + 32}" y="{ly}" font-family="sans-serif" '
            f'font-size="12">{_escape(s.label)}</text>'
        )
    return canvas.finish()


def render_stem_chart(
    values: list[float],
    title: str,
    xlabel: str,
    ylabel: str,
    color: str = "#333333",
    timestamp: bool = True,
) -> str:
    """Vertical stems from zero to each value, indexed 0..len-1."""
    n = len(values)
    lo, hi = min(min(values), 0.0), max(max(values), 0.0)
    spread = (hi - lo) or 1.0
    canvas = _Canvas(title, timestamp)
    axes = _Axes((-0.5, n - 0.5), (lo - 0.05 * spread, hi + 0.05 * spread), False)
    axes.draw(canvas, xlabel, ylabel)
    base = axes.py(0.0)
    stems = []
    for k, v in enumerate(values):
        px = axes.px(k)
        stems.append(f"M{px:.2f} {base:.2f}L{px:.2f} {axes.py(v):.2f}")
    canvas.add(f'<path d="{"".join(stems)}" stroke="{color}" stroke-width="1" fill="none"/>')
    return canvas.finish()


def render_waveform(
    values: list[float],
    title: str,
    xlabel: str,
    ylabel: str,
    color: str = "#333333",
    timestamp: bool = True,
) -> str:
    """Sample values joined by a polyline, indexed 0..len-1."""
    n = len(values)
    lo, hi = min(values), max(values)
    spread = (hi - lo) or 1.0
    canvas = _Canvas(title, timestamp)
    axes = _Axes((-0.5, n - 0.5), (lo - 0.05 * spread, hi + 0.05 * spread), False)
    axes.draw(canvas, xlabel, ylabel)
    points = " ".join(f"{axes.px(k):.2f},{axes.py(v):.2f}" for k, v in enumerate(values))
    canvas.add(f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1"/>')
    return canvas.finish()
