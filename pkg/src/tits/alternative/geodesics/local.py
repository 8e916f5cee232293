"""Local geodesic checks for concatenated traces.

A concatenation of straight pieces is a local geodesic exactly when, at every
breakpoint, the incoming and outgoing directions are at distance at least π
in the link of the breakpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from tits.alternative.algebra import PI, AngleExpr, compare
from tits.alternative.complexes import TriangleComplex
from tits.alternative.exceptions import DiscontinuousPath
from tits.alternative.geodesics.development import Angle, numeric, principal, reverse
from tits.alternative.geodesics.tracer import EdgePoint, GeodesicPath, InteriorPoint, Location, VertexPoint
from tits.alternative.links.graph import (
    edge_link_point,
    link_distance,
    link_of_edge_point,
    link_of_vertex,
    vertex_link_point,
)

_MATCH_TOLERANCE = 1e-7


@dataclass(frozen=True)
class PiecewiseGeodesic:
    """Straight pieces traversed one after another."""

    pieces: tuple[GeodesicPath, ...]

    @property
    def length(self) -> float:
        return sum(piece.length for piece in self.pieces)

    @property
    def breakpoints(self) -> list[Location]:
        return [piece.end.location for piece in self.pieces[:-1]]

    def to_dict(self) -> dict:
        return {"length": self.length, "pieces": [piece.to_dict() for piece in self.pieces]}


@dataclass(frozen=True)
class Breakpoint:
    """Link distance between the directions meeting at a breakpoint."""

    index: int
    location: Location
    exact: Optional[AngleExpr]
    numeric: float

    @property
    def vertex(self) -> Optional[str]:
        return self.location.vertex if isinstance(self.location, VertexPoint) else None

    def to_dict(self) -> dict:
        return {"index": self.index, "at": self.location.to_dict(), "distance": self.exact or self.numeric, "numeric": self.numeric}


@dataclass(frozen=True)
class LocalGeodesicReport:
    """Result of :func:`verify_local_geodesic`."""

    ok: bool
    breakpoints: tuple[Breakpoint, ...]

    @property
    def min_distance(self) -> Optional[Breakpoint]:
        if not self.breakpoints:
            return None
        return min(self.breakpoints, key=lambda b: b.numeric)

    def to_dict(self) -> dict:
        smallest = self.min_distance
        return {
            "ok": self.ok,
            "min_distance": smallest.to_dict() if smallest else None,
            "breakpoints": [b.to_dict() for b in self.breakpoints],
        }


def _same_location(a: Location, b: Location) -> bool:
    if isinstance(a, VertexPoint) and isinstance(b, VertexPoint):
        return a.vertex == b.vertex
    if isinstance(a, EdgePoint) and isinstance(b, EdgePoint):
        return a.edge == b.edge and abs(a.offset - b.offset) < _MATCH_TOLERANCE
    if isinstance(a, InteriorPoint) and isinstance(b, InteriorPoint):
        return a.triangle == b.triangle and math.dist(a.xy, b.xy) < _MATCH_TOLERANCE
    return False


def _interior_gap(complex_: TriangleComplex, incoming: GeodesicPath, outgoing: GeodesicPath) -> tuple[Optional[AngleExpr], float]:
    back = incoming.end_frame.to_local(reverse(incoming.direction), complex_)
    gap: Angle = (back - outgoing.angle) if isinstance(back, AngleExpr) and isinstance(outgoing.angle, AngleExpr) else (
        numeric(back, complex_) - numeric(outgoing.angle, complex_)
    )
    gap = principal(gap, complex_)
    value = numeric(gap, complex_)
    if isinstance(gap, AngleExpr):
        exact = -gap if value < 0 else gap
        return exact, abs(value)
    return None, abs(value)


def breakpoint_distance(complex_: TriangleComplex, index: int, incoming: GeodesicPath, outgoing: GeodesicPath) -> Breakpoint:
    """Link distance at the junction of two consecutive pieces."""
    location = incoming.end.location
    if isinstance(location, InteriorPoint):
        exact, value = _interior_gap(complex_, incoming, outgoing)
        return Breakpoint(index, location, exact, value)
    assert incoming.end.arrival is not None
    if isinstance(location, EdgePoint):
        link = link_of_edge_point(complex_, location.edge)
        before = edge_link_point(location.edge, incoming.end.triangle, incoming.end.arrival)
        after = edge_link_point(location.edge, outgoing.start.triangle, outgoing.angle)
    else:
        link = link_of_vertex(complex_, location.vertex)
        before = vertex_link_point(complex_, location.vertex, incoming.end.triangle, incoming.end.arrival)
        after = vertex_link_point(complex_, location.vertex, outgoing.start.triangle, outgoing.angle)
    distance = link_distance(link, before, after)
    return Breakpoint(index, location, distance.exact, distance.numeric)


def _at_least_pi(complex_: TriangleComplex, point: Breakpoint, tolerance: float) -> bool:
    if point.exact is not None:
        return compare(point.exact, PI, complex_.atom_env, tolerance) >= 0
    return point.numeric >= math.pi - tolerance


def _beyond_pi(complex_: TriangleComplex, point: Breakpoint, tolerance: float) -> bool:
    if point.exact is not None:
        return compare(point.exact, PI, complex_.atom_env, tolerance) > 0
    return point.numeric > math.pi + tolerance


def verify_local_geodesic(complex_: TriangleComplex, path: PiecewiseGeodesic, tolerance: float = 1e-9) -> LocalGeodesicReport:
    """Check the link distance at every breakpoint.

    Raises:
        DiscontinuousPath: A piece does not start where the previous one ended.
    """
    points = []
    for index, (incoming, outgoing) in enumerate(zip(path.pieces, path.pieces[1:])):
        if not _same_location(incoming.end.location, outgoing.start.location):
            raise DiscontinuousPath(
                f"Piece {index + 1} starts at {outgoing.start.location} but piece {index} ends at {incoming.end.location}",
                data={"index": index},
            )
        points.append(breakpoint_distance(complex_, index, incoming, outgoing))
    ok = all(_at_least_pi(complex_, p, tolerance) for p in points)
    return LocalGeodesicReport(ok, tuple(points))


def curved_breakpoints(complex_: TriangleComplex, path: PiecewiseGeodesic, tolerance: float = 1e-9) -> list[Breakpoint]:
    """Vertex breakpoints where the directions are more than π apart."""
    report = verify_local_geodesic(complex_, path, tolerance)
    return [p for p in report.breakpoints if p.vertex is not None and _beyond_pi(complex_, p, tolerance)]


def is_curved(complex_: TriangleComplex, path: PiecewiseGeodesic, tolerance: float = 1e-9) -> Optional[str]:
    """The first vertex where the path turns by more than π, if any."""
    curved = curved_breakpoints(complex_, path, tolerance)
    return curved[0].vertex if curved else None
