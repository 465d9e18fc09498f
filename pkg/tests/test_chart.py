import xml.etree.ElementTree as ET

from attack_econ import SweepSpec, run_sweep
from attack_econ.chart import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def polylines(svg):
    return ET.fromstring(svg).findall(SVG + "polyline")


def test_at_most_five_alpha_rows(fig2):
    svg = render_svg(run_sweep(SweepSpec(fig2, 0.0, 1.0, 11, 0.0, 5.0, 11)))
    # one payoff curve and one phase-one line per chosen row
    assert len(polylines(svg)) == 10
    labels = [t.text for t in ET.fromstring(svg).iter(SVG + "text") if t.text and t.text.endswith("pi2")]
    assert labels == [f"alpha {a:.2f}: pi2" for a in (0.0, 0.2, 0.5, 0.8, 1.0)]


def test_few_rows_all_drawn(fig2):
    svg = render_svg(run_sweep(SweepSpec(fig2, 0.0, 1.0, 3, 0.0, 5.0, 6)))
    assert len(polylines(svg)) == 6
    curve = polylines(svg)[0].get("points").split()
    assert len(curve) == 6


def test_degenerate_grid_still_renders(fig2):
    svg = render_svg(run_sweep(SweepSpec(fig2, 0.4, 0.4, 2, 2.0, 2.0, 2)))
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "0 0 800 600"
    for line in polylines(svg):
        for pt in line.get("points").split():
            x, y = map(float, pt.split(","))
            assert 0 <= x <= 800 and 0 <= y <= 600
