"""Curved axes through cone points."""

import pytest

from tits.alternative.algebra import PI, pi_times
from tits.alternative.geodesics import (
    EndKind,
    PiecewiseGeodesic,
    StartPoint,
    curved_breakpoints,
    geodesic_between,
    is_curved,
    shoot_perpendicular,
    trace,
    verify_local_geodesic,
)
from tits.alternative.testing import equilateral_fan


@pytest.fixture
def heptagon():
    return equilateral_fan(7)


def through_the_apex(fan):
    """Up the altitude of triangle 0 into ``c``, then out through triangle 3."""
    into = shoot_perpendicular(fan, ("r0", "r1"), 0.5, 0, 5.0)
    out = trace(fan, StartPoint.at_vertex("c", 3), pi_times("3/10"), 1.0)
    return into, PiecewiseGeodesic((into, out))


class TestCurvedAxis:
    def test_altitude_stops_at_the_apex(self, heptagon):
        into, _ = through_the_apex(heptagon)
        assert into.end.kind is EndKind.HIT_VERTEX
        assert into.end.vertex == "c"
        assert into.end.arrival == pi_times("1/6")
        assert into.length == pytest.approx(3**0.5 / 2)

    def test_turning_more_than_pi_at_the_apex(self, heptagon):
        _, path = through_the_apex(heptagon)
        report = verify_local_geodesic(heptagon, path)
        assert report.ok
        (point,) = report.breakpoints
        assert point.vertex == "c"
        assert point.exact == pi_times("17/15")
        assert is_curved(heptagon, path) == "c"
        assert curved_breakpoints(heptagon, path) == [point]

    def test_opposite_rim_vertices_go_straight_through(self, heptagon):
        start = StartPoint.at_vertex("r0", heptagon.star("r0")[0])
        target = StartPoint.at_vertex("r4", heptagon.star("r4")[0])
        path, report = geodesic_between(heptagon, start, target, 5.0, assume_simply_connected=True)
        assert report.ok
        assert path.length == pytest.approx(2.0)
        assert all(p.exact is None or p.exact == PI for p in report.breakpoints)
        assert is_curved(heptagon, path) is None
