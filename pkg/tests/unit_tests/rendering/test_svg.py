"""Tests for the SVG renderings."""

from tits.alternative.algebra import HALF_PI
from tits.alternative.complexes import patches
from tits.alternative.geodesics import StartPoint, trace
from tits.alternative.links import link_of_edge_point, link_of_vertex
from tits.alternative.rendering import develop_patch, render_link, render_patch, render_trace, write_svg


def test_link_picture_labels_arcs_with_exact_lengths(hexagon):
    svg = render_link(link_of_vertex(hexagon, "c"))
    assert svg.startswith("<?xml")
    assert "<svg" in svg
    assert "<title>Link at c</title>" in svg
    assert svg.count("<path ") == 6
    assert "π/3" in svg


def test_parallel_arcs_are_drawn_apart(book):
    svg = render_link(link_of_edge_point(book, ("s0", "s1")))
    paths = [line for line in svg.splitlines() if "<path " in line]
    assert len(paths) == 3
    assert len(set(paths)) == 3


def test_trace_picture(square):
    path = trace(square, StartPoint.interior(0, 0.8, 0.2), HALF_PI, 10.0)
    svg = render_trace(square, path)
    assert svg.count("<polygon ") == 2
    assert 'class="geodesic"' in svg


def test_patch_picture(theta):
    patch = patches(theta)[0]
    assert len(develop_patch(theta, patch)) == len(patch.triangles)
    svg = render_patch(theta, patch)
    assert svg.count("<polygon ") == 12
    assert 'class="geodesic"' not in svg


def test_write_svg_creates_directories(tmp_path, hexagon):
    destination = tmp_path / "pictures" / "links" / "c.svg"
    written = write_svg(render_link(link_of_vertex(hexagon, "c")), destination)
    assert written == destination
    assert destination.read_text(encoding="utf-8").rstrip().endswith("</svg>")
