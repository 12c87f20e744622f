import xml.etree.ElementTree as ET

from ame_lab.figures import FIGURES
from ame_lab.plot import render_svg

NS = "{http://www.w3.org/2000/svg}"


def test_one_polyline_per_group():
    res = FIGURES["fig1"].run(threads=1)
    root = ET.fromstring(render_svg(res, "logneg", "title"))
    lines = root.findall(f"{NS}polyline")
    assert len(lines) == 5 * 2
    # m=1 groups have 5 points, m=2 groups 10
    counts = sorted(len(pl.get("points").split()) for pl in lines)
    assert counts == [5] * 5 + [10] * 5


def test_two_states_are_labelled():
    svg = render_svg(FIGURES["fig7"].run(threads=1), "logneg")
    assert "phi5_prime p=0.36, m=1" in svg
    assert svg.count("<polyline") == 4


def test_render_is_deterministic():
    res = FIGURES["fig4"].run(threads=1)
    assert render_svg(res, "coh_max") == render_svg(res, "coh_max")
