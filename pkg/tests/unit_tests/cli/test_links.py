"""Tests for `tits-alt links`."""


def test_single_vertex(run_json, complex_file):
    result, payload = run_json("links", complex_file("hexagonal_fan"), "--vertex", "c")

    assert result.exit_code == 0
    (report,) = payload["data"]["links"]
    assert report["center"] == "c"
    assert len(report["arcs"]) == 6
    assert report["girth"]["exact"]["pi"] == "2"
    assert report["unfoldable"] is None


def test_every_vertex_sorted(run_json, complex_file):
    _, payload = run_json("links", complex_file("unit_square"))
    centers = [r["center"] for r in payload["data"]["links"]]
    assert centers == ["v00", "v01", "v10", "v11"]
    assert all(r["girth"]["exact"] is None for r in payload["data"]["links"])


def test_edge_point(run_json, complex_file):
    _, payload = run_json("links", complex_file("book_of_squares"), "--edge", "s1,s0")
    (report,) = payload["data"]["links"]
    assert len(report["arcs"]) == 3


def test_unfoldable_wedge_is_reported(run_json, complex_file):
    _, payload = run_json("links", complex_file("double_fan"), "--vertex", "v")
    (report,) = payload["data"]["links"]
    assert report["unfoldable"]["y"] == "w"


def test_unknown_vertex(run_json, complex_file):
    result, payload = run_json("links", complex_file("unit_square"), "--vertex", "q")
    assert result.exit_code == 2
    assert payload["error"]["data"] == {"vertex": "q"}


def test_vertex_and_edge_conflict(run_json, complex_file):
    result, _ = run_json("links", complex_file("book_of_squares"), "--vertex", "s0", "--edge", "s0,s1")
    assert result.exit_code == 2


def test_svg_needs_one_link(run_json, complex_file, tmp_path):
    result, payload = run_json("links", complex_file("unit_square"), "--svg", tmp_path / "link.svg")
    assert result.exit_code == 2
    assert payload["error"]["hint"] == ["add --vertex V or --edge U,V"]


def test_svg(run_json, complex_file, tmp_path):
    target = tmp_path / "link.svg"
    result, _ = run_json("links", complex_file("hexagonal_fan"), "--vertex", "c", "--svg", target)
    assert result.exit_code == 0
    assert "<svg" in target.read_text(encoding="utf-8")
