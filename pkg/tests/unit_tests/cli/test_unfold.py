"""Tests for `tits-alt unfold`."""

from tits.alternative.complexes import load_complex
from tits.alternative.models import ComplexDocument
from tits.alternative.testing import triple_fan


def test_unfolds_to_a_fixpoint(run_json, complex_file):
    result, payload = run_json("unfold", complex_file("triple_fan"))

    assert result.exit_code == 0
    data = payload["data"]
    assert len(data["steps"]) == 2
    assert data["properties"]["pass"] is True
    assert len(data["complex"]["vertices"]) == len(triple_fan().vertices) + 2


def test_single_vertex(run_json, complex_file):
    _, payload = run_json("unfold", complex_file("double_fan"), "--vertex", "v")
    (step,) = payload["data"]["steps"]
    assert step["new_vertices"] == ["v~1", "v~2"]
    assert step["y"] == "w"


def test_writes_a_loadable_document(run_json, complex_file, tmp_path):
    target = tmp_path / "out" / "unfolded.json"
    result, _ = run_json("unfold", complex_file("double_fan"), "--write", target)

    assert result.exit_code == 0
    unfolded = load_complex(ComplexDocument.from_file(target))
    assert "v~1" in unfolded.vertices


def test_nothing_to_unfold(run_json, complex_file):
    result, payload = run_json("unfold", complex_file("theta_circle"))
    assert result.exit_code == 0
    assert payload["data"]["steps"] == []


def test_vertex_that_is_not_unfoldable(run_json, complex_file):
    result, payload = run_json("unfold", complex_file("hexagonal_fan"), "--vertex", "c")
    assert result.exit_code == 1
    assert payload["error"]["data"]["exception"] == "NotUnfoldable"
