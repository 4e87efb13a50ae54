import re
import xml.etree.ElementTree as ET

from lcrkn import PointSet, construct_three_arcs, crossing_profile, emit_svg

from conftest import convex_polygon

NS = "{http://www.w3.org/2000/svg}"


def highlighted(svg):
    root = ET.fromstring(svg)
    group = next(g for g in root.iter(NS + "g") if g.get("class") == "max-edges")
    return list(group)


def test_convex_quadrilateral_highlights_diagonals():
    svg = emit_svg(convex_polygon(4))
    lines = highlighted(svg)
    assert len(lines) == 2
    assert {ln.get("data-crossings") for ln in lines} == {"1"}


def test_three_arc_figure():
    S = construct_three_arcs(9)
    prof = crossing_profile(S.points)
    svg = emit_svg(S.points, prof, parts=S.label_map(), title="n=9")
    root = ET.fromstring(svg)
    circles = list(root.iter(NS + "circle"))
    assert len(circles) == 9
    assert {c.get("data-part") for c in circles} == {"ARC0", "ARC1", "ARC2"}
    assert len({c.get("fill") for c in circles}) == 3
    assert len(highlighted(svg)) == len(prof.max_edges())
    assert "lcr=4" in svg


def test_empty_set():
    svg = emit_svg(PointSet([]))
    root = ET.fromstring(svg)
    assert len(root) == 0


def test_no_highlight_without_crossings():
    svg = emit_svg(PointSet.from_coords([(0, 0), (4, 0), (0, 4), (1, 1)]))
    assert highlighted(svg) == []


def test_deterministic_and_float_free_input():
    S = construct_three_arcs(7)
    a = emit_svg(S.points, parts=S.label_map())
    assert a == emit_svg(S.points, parts=S.label_map())
    assert not re.search(r"\de[+-]\d", a)
