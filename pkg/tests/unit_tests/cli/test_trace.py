"""Tests for `tits-alt trace`."""

import pytest


def test_straight_up_the_square(run_json, complex_file):
    result, payload = run_json("trace", complex_file("unit_square"), "--triangle", "0", "--at", "0.8,0.2", "--angle", "1/2")

    assert result.exit_code == 0
    (path,) = payload["data"]["paths"]
    assert path["triangles"] == [0, 1]
    assert path["end"]["status"] == "HitBoundary"


def test_budget_flag(run_json, complex_file):
    _, payload = run_json(
        "trace", complex_file("unit_square"), "--triangle", "0", "--at", "0.8,0.2", "--radians", "1.5707963267948966", "--budget", "0.3"
    )
    assert payload["data"]["paths"][0]["end"]["status"] == "BudgetExhausted"


def test_enumerate_branches(run_json, complex_file):
    _, payload = run_json(
        "trace", complex_file("book_of_squares"), "--triangle", "0", "--at", "0.6,0.3", "--angle", "3/2",
        "--budget", "1", "--branching", "enumerate",
    )
    statuses = [p["end"]["status"] for p in payload["data"]["paths"]]
    assert statuses == ["HitBranchingEdge", "BudgetExhausted", "BudgetExhausted"]


def test_fixed_choices(run_json, complex_file):
    _, payload = run_json(
        "trace", complex_file("book_of_squares"), "--triangle", "0", "--at", "0.6,0.3", "--angle", "3/2",
        "--budget", "1", "--branching", "fixed", "--choices", "4",
    )
    assert payload["data"]["paths"][0]["triangles"] == [0, 4, 5]


@pytest.mark.parametrize(
    "args",
    [
        ["--at", "0.8,0.2"],
        ["--at", "0.8,0.2", "--angle", "1/2", "--radians", "1.0"],
        ["--at", "0.8", "--angle", "1/2"],
        ["--angle", "1/2"],
        ["--at", "0.8,0.2", "--perpendicular"],
        ["--at", "0.8,0.2", "--angle", "1/2", "--choices", "1"],
        ["--at", "0.8,0.2", "--angle", "half"],
    ],
)
def test_rejected_invocations(run_json, complex_file, args):
    result, payload = run_json("trace", complex_file("unit_square"), "--triangle", "0", *args)
    assert result.exit_code == 2
    assert payload["error"]["code"] == "invalid_input"


def test_perpendicular_from_an_edge(run_json, complex_file, tmp_path):
    target = tmp_path / "trace.svg"
    result, payload = run_json(
        "trace", complex_file("unit_square"), "--triangle", "0", "--edge", "v00,v10", "--offset", "0.3",
        "--perpendicular", "--svg", target,
    )
    assert result.exit_code == 0
    assert payload["data"]["paths"][0]["length"] == pytest.approx(1.0)
    assert target.exists()
