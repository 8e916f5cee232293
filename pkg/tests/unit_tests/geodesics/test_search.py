"""Tests for point-to-point geodesics and local geodesic checks."""

import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tits.alternative.algebra import HALF_PI, pi_times
from tits.alternative.exceptions import (
    BudgetTooSmall,
    ComplexInputError,
    DiscontinuousPath,
    NotSimplyConnectedAsserted,
)
from tits.alternative.geodesics import (
    EndKind,
    PiecewiseGeodesic,
    StartPoint,
    geodesic_between,
    is_curved,
    shoot_perpendicular,
    trace,
    verify_local_geodesic,
)
from tits.alternative.testing import book_of_squares, equilateral_fan, unit_square


def inside(triangle=0, x=0.8, y=0.2):
    return StartPoint.interior(triangle, x, y)


def top_edge():
    return StartPoint.on_edge(("v01", "v11"), 0.8, 1)


class TestGeodesicBetween:
    def test_requires_the_simply_connected_assertion(self, square):
        with pytest.raises(NotSimplyConnectedAsserted) as excinfo:
            geodesic_between(square, inside(), top_edge(), 5.0)
        assert "assume_simply_connected" in excinfo.value.fix_suggestion

    def test_coincident_points(self, square):
        with pytest.raises(ComplexInputError):
            geodesic_between(square, inside(), inside(), 5.0, assume_simply_connected=True)

    def test_straight_segment_across_the_square(self, square):
        path, report = geodesic_between(square, inside(), top_edge(), 5.0, assume_simply_connected=True)
        assert path.length == pytest.approx(0.8)
        assert len(path.pieces) == 1
        assert path.pieces[0].triangles == (0, 1)
        assert report.ok
        assert report.breakpoints == ()

    def test_budget_too_small(self, square):
        with pytest.raises(BudgetTooSmall) as excinfo:
            geodesic_between(square, inside(), top_edge(), 0.5, assume_simply_connected=True)
        assert excinfo.value.data["budget"] == 0.5

    def test_bends_through_a_large_cone_point(self):
        fan = equilateral_fan(7)
        start = StartPoint.at_vertex("r0", fan.star("r0")[0])
        target = StartPoint.at_vertex("r3", fan.star("r3")[0])
        path, report = geodesic_between(fan, start, target, 5.0, assume_simply_connected=True)
        assert path.length == pytest.approx(2.0)
        assert report.ok


class TestLocalGeodesic:
    def pieces(self, square, turn):
        first = trace(square, inside(), HALF_PI, 0.3)
        second = trace(square, StartPoint(first.end.location, 0), turn, 0.2)
        return PiecewiseGeodesic((first, second))

    def test_straight_continuation(self, square):
        report = verify_local_geodesic(square, self.pieces(square, HALF_PI))
        assert report.ok
        (point,) = report.breakpoints
        assert point.numeric == pytest.approx(math.pi)
        assert point.vertex is None
        assert report.min_distance is point

    def test_turning_back(self, square):
        path = self.pieces(square, pi_times("3/2"))
        report = verify_local_geodesic(square, path)
        assert not report.ok
        assert report.breakpoints[0].numeric == pytest.approx(0.0, abs=1e-9)
        assert report.to_dict()["ok"] is False

    def test_interior_breakpoints_are_never_curved(self, square):
        assert is_curved(square, self.pieces(square, HALF_PI)) is None

    def test_pieces_must_meet(self, square):
        first = trace(square, inside(), HALF_PI, 0.3)
        second = trace(square, inside(y=0.1), HALF_PI, 0.3)
        with pytest.raises(DiscontinuousPath):
            verify_local_geodesic(square, PiecewiseGeodesic((first, second)))

    def test_length_and_breakpoints(self, square):
        path = self.pieces(square, HALF_PI)
        assert path.length == pytest.approx(0.5)
        assert len(path.breakpoints) == 1


# Points of the unit square with their planar coordinates. Triangle 0 is the
# half below the diagonal and shares its frame with the square; edge offsets
# run from the smaller vertex id.
def _square_points():
    offsets = st.floats(min_value=0.05, max_value=0.95)
    below_diagonal = st.tuples(st.floats(min_value=0.1, max_value=0.95), st.floats(min_value=0.05, max_value=0.85)).filter(
        lambda p: p[0] - p[1] >= 0.05
    )
    return st.one_of(
        below_diagonal.map(lambda p: ("inside", StartPoint.interior(0, *p), p)),
        offsets.map(lambda t: ("bottom", StartPoint.on_edge(("v00", "v10"), t, 0), (t, 0.0))),
        offsets.map(lambda s: ("right", StartPoint.on_edge(("v10", "v11"), s, 0), (1.0, s))),
        offsets.map(lambda t: ("top", StartPoint.on_edge(("v01", "v11"), t, 1), (t, 1.0))),
        offsets.map(lambda s: ("left", StartPoint.on_edge(("v00", "v01"), s, 1), (0.0, s))),
    )


square_points = _square_points()


def _separated(*points):
    for (kind_p, _, p), (kind_q, _, q) in itertools.combinations(points, 2):
        if math.dist(p, q) < 0.05 or (kind_p == kind_q and kind_p != "inside"):
            return False
    return True


def _distance(complex_, p, q):
    path, report = geodesic_between(complex_, p, q, 5.0, assume_simply_connected=True)
    assert report.ok
    return path.length


@settings(max_examples=25, deadline=None)
@given(square_points, square_points)
def test_geodesics_in_the_square_are_straight_and_symmetric(p, q):
    assume(_separated(p, q))
    square = unit_square()
    there, back = _distance(square, p[1], q[1]), _distance(square, q[1], p[1])
    assert there == pytest.approx(math.dist(p[2], q[2]), abs=1e-9)
    assert there == pytest.approx(back, abs=1e-9)


@settings(max_examples=20, deadline=None)
@given(square_points, square_points, square_points)
def test_triangle_inequality(p, q, r):
    assume(_separated(p, q, r))
    square = unit_square()
    assert _distance(square, p[1], r[1]) <= _distance(square, p[1], q[1]) + _distance(square, q[1], r[1]) + 1e-9


class TestAcrossTheSpine:
    """Pages ``a`` and ``b`` of the book unfold to one flat strip across the spine."""

    page_points = st.tuples(st.floats(min_value=0.1, max_value=0.9), st.floats(min_value=0.05, max_value=0.8)).filter(
        lambda p: p[0] - p[1] >= 0.05
    )

    @settings(max_examples=20, deadline=None)
    @given(page_points, page_points)
    def test_unfolded_distance_and_symmetry(self, a, b):
        book = book_of_squares()
        x, y = StartPoint.interior(0, *a), StartPoint.interior(2, *b)
        there, report = geodesic_between(book, x, y, 5.0, assume_simply_connected=True)
        back, _ = geodesic_between(book, y, x, 5.0, assume_simply_connected=True)
        assert report.ok
        assert there.length == pytest.approx(math.hypot(a[0] - b[0], a[1] + b[1]), abs=1e-9)
        assert back.length == pytest.approx(there.length, abs=1e-9)
        (piece,) = there.pieces
        assert piece.triangles == (0, 2)
        assert piece.end.triangle == 2
        assert [c.edge for c in piece.crossings] == [("s0", "s1")]

    @settings(max_examples=20, deadline=None)
    @given(page_points, st.lists(st.floats(min_value=0.05, max_value=0.95), min_size=1, max_size=5))
    def test_paths_to_the_spine_end_on_the_near_page(self, a, offsets):
        book = book_of_squares()
        x = StartPoint.interior(0, *a)
        for offset in offsets:
            path, _ = geodesic_between(book, x, StartPoint.on_edge(("s0", "s1"), offset, 2), 5.0, assume_simply_connected=True)
            assert path.length == pytest.approx(math.hypot(a[0] - offset, a[1]), abs=1e-9)
            assert path.pieces[-1].end.triangle == 0
            assert path.pieces[-1].crossings == ()

    def test_perpendicular_foot_reaches_the_far_page(self):
        book = book_of_squares()
        foot = shoot_perpendicular(book, ("s0", "s1"), 0.4, 0, 0.3)
        assert foot.end.kind is EndKind.BUDGET_EXHAUSTED
        x = StartPoint(foot.end.location, foot.end.triangle)
        for b in [(0.5, 0.2), (0.9, 0.6), (0.2, 0.1)]:
            path, _ = geodesic_between(book, x, StartPoint.interior(2, *b), 5.0, assume_simply_connected=True)
            assert path.pieces[-1].end.triangle == 2
            assert path.length == pytest.approx(math.hypot(0.4 - b[0], 0.3 + b[1]), abs=1e-9)
