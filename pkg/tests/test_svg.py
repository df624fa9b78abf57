import re
import xml.etree.ElementTree as ET
from pathlib import Path

from surfclass.oracle import canonical_sphere, canonical_torus
from surfclass.polygon import build_polygon, find_interleaved
from surfclass.svg import render_svg

GOLDEN = Path(__file__).parent / "golden"
NS = "{http://www.w3.org/2000/svg}"


def torus_svg():
    P = build_polygon(canonical_torus())
    return render_svg(P, find_interleaved(P.word))


def sphere_svg():
    return render_svg(build_polygon(canonical_sphere()))


def test_torus_golden():
    assert torus_svg() == (GOLDEN / "torus_polygon.svg").read_text(encoding="utf-8")


def test_sphere_golden():
    assert sphere_svg() == (GOLDEN / "sphere_polygon.svg").read_text(encoding="utf-8")


def test_rendering_is_repeatable():
    assert torus_svg() == torus_svg()


def _sides(svg):
    root = ET.fromstring(svg)
    return [e for e in root.iter(f"{NS}line") if e.get("stroke-width") == "3"]


def _chords(svg):
    root = ET.fromstring(svg)
    return [e for e in root.iter(f"{NS}line") if e.get("stroke-dasharray")]


def test_four_sides_with_paired_colors():
    sides = _sides(torus_svg())
    assert len(sides) == 4
    colors = [s.get("stroke") for s in sides]
    assert colors[0] == colors[2] and colors[1] == colors[3] and colors[0] != colors[1]
    labels = [t.text for t in ET.fromstring(torus_svg()).iter(f"{NS}text")]
    assert labels == ["a", "b", "a⁻¹", "b⁻¹"]


def test_no_arcs_means_polygon_only():
    assert _chords(sphere_svg()) == []


def _crosses(p, q):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    return orient(p[0], p[1], q[0]) * orient(p[0], p[1], q[1]) < 0 and \
        orient(q[0], q[1], p[0]) * orient(q[0], q[1], p[1]) < 0


def test_interleaved_chords_cross_once():
    segs = [
        ((float(c.get("x1")), float(c.get("y1"))), (float(c.get("x2")), float(c.get("y2"))))
        for c in _chords(torus_svg())
    ]
    assert len(segs) == 2
    assert _crosses(*segs)


def test_numbers_have_fixed_precision():
    nums = re.findall(r'[xy][12]?="([-0-9.]+)"', torus_svg())
    assert nums and all(re.fullmatch(r"-?\d+\.\d\d", v) for v in nums)
