"""Tests for the local CAT(0) link condition."""

import math

import pytest

from tits.alternative.algebra import TWO_PI, pi_times
from tits.alternative.checks import check_local_cat0, vertex_girths
from tits.alternative.testing import equilateral_fan


@pytest.mark.parametrize("name", ["square", "book", "theta", "hexagon", "skewed_theta"])
def test_nonpositively_curved_fixtures_pass(name, request):
    report = check_local_cat0(request.getfixturevalue(name))
    assert report.passed
    assert report.failures == ()


def test_short_cone_point_fails(pentagon):
    report = check_local_cat0(pentagon)
    assert not report.passed
    (failure,) = report.failures
    assert failure.vertex == "c"
    assert failure.girth.exact == pi_times("5/3")
    assert failure.to_dict() == {"vertex": "c", "girth": pi_times("5/3"), "cycle": [0, 1, 2, 3, 4]}


def test_long_cone_point_passes():
    report = check_local_cat0(equilateral_fan(7))
    assert report.passed
    assert report.girths["c"].exact == pi_times("7/3")


def test_theta_link_with_long_strand_passes(skewed_theta):
    assert vertex_girths(skewed_theta)["p"].exact == TWO_PI


def test_girths_cover_every_vertex(square):
    girths = vertex_girths(square)
    assert list(girths) == ["v00", "v01", "v10", "v11"]
    assert all(not g.is_finite for g in girths.values())
    assert girths["v00"].numeric == math.inf


def test_threads_do_not_change_the_report(theta):
    assert check_local_cat0(theta, threads=2).to_dict() == check_local_cat0(theta).to_dict()


def test_report_lists_girths(hexagon):
    data = check_local_cat0(hexagon).to_dict()
    assert data["pass"] is True
    assert data["girths"]["c"] == TWO_PI
    assert data["girths"]["r0"] is None
