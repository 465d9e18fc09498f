"""Minimal static SVG chart of payoff curves from a sweep grid."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .sweep import SweepGrid

WIDTH, HEIGHT = 800, 600
LEFT, RIGHT, TOP, BOTTOM = 80, 160, 50, 60
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
MAX_CURVES = len(COLORS)


def _pick_rows(count: int) -> list[int]:
    if count <= MAX_CURVES:
        return list(range(count))
    return sorted({round(k * (count - 1) / (MAX_CURVES - 1)) for k in range(MAX_CURVES)})


def _span(lo: float, hi: float) -> tuple[float, float]:
    if hi - lo <= 0.0:
        pad = max(1.0, abs(lo) * 0.05)
        return lo - pad, hi + pad
    return lo, hi


def render_svg(grid: SweepGrid) -> str:
    """Two-phase payoff against t (solid) and phase-one payoff (dashed),
    for up to five alpha rows spread evenly across the grid."""
    rows = list(grid.rows())
    chosen = [rows[i] for i in _pick_rows(len(rows))]

    ys = [0.0]
    for row in chosen:
        ys.extend(c.pi2 for c in row)
        ys.append(row[0].pi1)
    t0, t1 = _span(grid.spec.t_min, grid.spec.t_max)
    y0, y1 = _span(min(ys), max(ys))

    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM

    def sx(t: float) -> float:
        return LEFT + (t - t0) / (t1 - t0) * plot_w

    def sy(y: float) -> float:
        return TOP + (y1 - y) / (y1 - y0) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{LEFT}" y="30" font-family="sans-serif" font-size="16">Attack payoff vs. phase-two completion time</text>',
        f'<line x1="{LEFT}" y1="{TOP + plot_h}" x2="{LEFT + plot_w}" y2="{TOP + plot_h}" stroke="black"/>',
        f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{TOP + plot_h}" stroke="black"/>',
    ]
    for k in range(5):
        t = t0 + k * (t1 - t0) / 4
        y = y0 + k * (y1 - y0) / 4
        out.append(f'<line x1="{sx(t):.2f}" y1="{TOP + plot_h}" x2="{sx(t):.2f}" y2="{TOP + plot_h + 5}" stroke="black"/>')
        out.append(
            f'<text x="{sx(t):.2f}" y="{TOP + plot_h + 20}" font-family="sans-serif" font-size="12" '
            f'text-anchor="middle">{t:.2f}</text>'
        )
        out.append(f'<line x1="{LEFT - 5}" y1="{sy(y):.2f}" x2="{LEFT}" y2="{sy(y):.2f}" stroke="black"/>')
        out.append(
            f'<text x="{LEFT - 8}" y="{sy(y) + 4:.2f}" font-family="sans-serif" font-size="12" '
            f'text-anchor="end">{y:.1f}</text>'
        )
    out.append(
        f'<text x="{LEFT + plot_w / 2:.2f}" y="{HEIGHT - 15}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle">t</text>'
    )
    out.append(
        f'<text x="20" y="{TOP + plot_h / 2:.2f}" font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 20 {TOP + plot_h / 2:.2f})" text-anchor="middle">payoff</text>'
    )
    if y0 < 0.0 < y1:
        out.append(
            f'<line x1="{LEFT}" y1="{sy(0.0):.2f}" x2="{LEFT + plot_w}" y2="{sy(0.0):.2f}" '
            f'stroke="#888888" stroke-width="0.5"/>'
        )

    for k, row in enumerate(chosen):
        color = COLORS[k]
        pts = " ".join(f"{sx(c.t):.2f},{sy(c.pi2):.2f}" for c in row)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>')
        pi1 = row[0].pi1
        out.append(
            f'<polyline points="{sx(row[0].t):.2f},{sy(pi1):.2f} {sx(row[-1].t):.2f},{sy(pi1):.2f}" '
            f'fill="none" stroke="{color}" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
        ly = TOP + 20 + k * 40
        lx = WIDTH - RIGHT + 20
        label = escape(f"alpha {row[0].alpha:.2f}")
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 25}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 32}" y="{ly + 4}" font-family="sans-serif" font-size="12">{label}: pi2</text>')
        out.append(
            f'<line x1="{lx}" y1="{ly + 16}" x2="{lx + 25}" y2="{ly + 16}" stroke="{color}" '
            f'stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
        out.append(f'<text x="{lx + 32}" y="{ly + 20}" font-family="sans-serif" font-size="12">{label}: pi1</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
