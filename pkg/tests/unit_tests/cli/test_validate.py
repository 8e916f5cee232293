"""Tests for `tits-alt validate` and input failures shared by every command."""

import json

import pytest

BROKEN = {
    "vertices": ["A", "B", "C"],
    "triangles": [{"v": ["A", "B", "C"], "angles": ["1/4", "1/4", "1/4"], "sides": [1.0, 1.4142135623730951, 1.0]}],
}


def test_reports_the_shape(run_json, complex_file):
    result, payload = run_json("validate", complex_file("unit_square"))

    assert result.exit_code == 0
    data = payload["data"]
    assert (data["vertices"], data["edges"], data["triangles"]) == (4, 5, 2)
    assert data["euler_characteristic"] == 1
    assert data["branching_edges"] == []
    assert data["thick"] is False


def test_branching_edges(run_json, complex_file):
    _, payload = run_json("validate", complex_file("book_of_squares"))
    assert payload["data"]["branching_edges"] == [["s0", "s1"]]
    assert payload["data"]["thick"] is True


def test_angle_sum_is_rejected(run_json, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(BROKEN), encoding="utf-8")

    result, payload = run_json("validate", path)

    assert result.exit_code == 2
    assert payload["ok"] is False
    assert payload["error"]["code"] == "invalid_input"
    assert payload["error"]["data"]["exception"] == "AngleSumViolation"


def test_unparseable_document(run_json, tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{not json", encoding="utf-8")

    result, payload = run_json("validate", path)

    assert result.exit_code == 2
    assert payload["error"]["data"]["exception"] == "MalformedDocument"


def test_bad_config_file(run_json, complex_file, tmp_path):
    config = tmp_path / "settings.yaml"
    config.write_text("budget: -1\n", encoding="utf-8")

    result, payload = run_json("--config", config, "validate", complex_file("unit_square"))

    assert result.exit_code == 2
    assert payload["error"]["data"]["exception"] == "ConfigurationError"


@pytest.mark.parametrize("name", ["theta_circle", "double_fan", "sheared_annulus"])
def test_fixture_documents_load(run_json, complex_file, name):
    result, _ = run_json("validate", complex_file(name))
    assert result.exit_code == 0
