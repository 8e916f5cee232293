"""Straight-line tracing through a triangle complex.

A trace starts at a point (triangle interior, edge interior or vertex) with a
launch angle, and walks straight through the development: inside a triangle
the path is a segment, crossing a degree-2 edge it continues into the other
triangle, and at a branching edge (degree at least 3) the branch policy
decides. Directions stay exact whenever the launch angle is exact, so arrival
angles at edges are exact too.
"""

from __future__ import annotations

import logging
import math
import weakref
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Optional, Union

import numpy as np

from tits.alternative.algebra import HALF_PI, PI, TWO_PI, ZERO, AngleExpr, compare
from tits.alternative.checks import check_local_cat0
from tits.alternative.complexes import EdgeKey, TriangleComplex, edge_key
from tits.alternative.complexes.model import DEFAULT_TOLERANCE
from tits.alternative.exceptions import InvalidDirection, TriangleNotIncident, ZeroBudget
from tits.alternative.geodesics.development import Angle, Frame, cross2, cross_edge, numeric, principal, reverse, unit

logger = logging.getLogger(__name__)

_STEP_EPSILON = 1e-12

#: Link condition result per complex, so repeated traces check once.
_LOCALLY_CAT0: "weakref.WeakKeyDictionary[TriangleComplex, bool]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class InteriorPoint:
    """A point inside a triangle, in that triangle's local coordinates."""

    triangle: int
    xy: tuple[float, float]

    def to_dict(self) -> dict:
        return {"kind": "interior", "triangle": self.triangle, "xy": list(self.xy)}


@dataclass(frozen=True)
class EdgePoint:
    """A point inside an edge, ``offset`` from the smaller endpoint."""

    edge: EdgeKey
    offset: float

    def to_dict(self) -> dict:
        return {"kind": "edge", "edge": list(self.edge), "offset": self.offset}


@dataclass(frozen=True)
class VertexPoint:
    """A vertex."""

    vertex: str

    def to_dict(self) -> dict:
        return {"kind": "vertex", "vertex": self.vertex}


Location = Union[InteriorPoint, EdgePoint, VertexPoint]


@dataclass(frozen=True)
class StartPoint:
    """Where a trace starts and which triangle it enters first.

    The launch angle is measured from a reference ray turning into the
    triangle: side 0→1 for interior points, the edge direction (smaller to
    larger endpoint) for edge points, and the side towards the smaller
    neighbour for vertices.
    """

    location: Location
    triangle: int

    @classmethod
    def interior(cls, triangle: int, x: float, y: float) -> StartPoint:
        return cls(InteriorPoint(triangle, (float(x), float(y))), triangle)

    @classmethod
    def on_edge(cls, edge: EdgeKey, offset: float, triangle: int) -> StartPoint:
        return cls(EdgePoint(edge_key(*edge), float(offset)), triangle)

    @classmethod
    def at_vertex(cls, vertex: str, triangle: int) -> StartPoint:
        return cls(VertexPoint(vertex), triangle)

    def to_dict(self) -> dict:
        return {**self.location.to_dict(), "triangle": self.triangle}


class EndKind(str, Enum):
    """Why a trace stopped."""

    BUDGET_EXHAUSTED = "BudgetExhausted"
    HIT_BRANCHING_EDGE = "HitBranchingEdge"
    HIT_BOUNDARY = "HitBoundary"
    HIT_VERTEX = "HitVertex"
    REACHED = "Reached"


@dataclass(frozen=True)
class EndStatus:
    """End state of a trace.

    ``arrival`` is the angle between the reference ray at the end location
    and the reversed path direction, inside ``triangle``: from the edge
    direction for edge stops, from the side towards the smaller neighbour
    for vertex stops.
    """

    kind: EndKind
    triangle: int
    location: Location
    arrival: Optional[Angle] = None

    @property
    def edge(self) -> Optional[EdgeKey]:
        return self.location.edge if isinstance(self.location, EdgePoint) else None

    @property
    def offset(self) -> Optional[float]:
        return self.location.offset if isinstance(self.location, EdgePoint) else None

    @property
    def vertex(self) -> Optional[str]:
        return self.location.vertex if isinstance(self.location, VertexPoint) else None

    def to_dict(self) -> dict:
        return {"status": self.kind.value, "triangle": self.triangle, "arrival": self.arrival, **self.location.to_dict()}


@dataclass(frozen=True)
class Crossing:
    """Passage through the interior of an edge."""

    edge: EdgeKey
    offset: float
    point: tuple[float, float]
    arrival: Angle
    degree: int
    left: int
    entered: int

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "offset": self.offset,
            "arrival": self.arrival,
            "degree": self.degree,
            "from": self.left,
            "to": self.entered,
        }


@dataclass(frozen=True)
class Leg:
    """The straight piece of a path inside one triangle."""

    triangle: int
    frame: Frame
    entry: tuple[float, float]
    exit: tuple[float, float]

    @property
    def length(self) -> float:
        return math.dist(self.entry, self.exit)


@dataclass(frozen=True)
class GeodesicPath:
    """A traced path with its development.

    All coordinates are in the development plane of the first frame.
    """

    start: StartPoint
    angle: Angle
    direction: Angle
    legs: tuple[Leg, ...]
    crossings: tuple[Crossing, ...]
    end: EndStatus

    @property
    def length(self) -> float:
        return sum(leg.length for leg in self.legs)

    @property
    def triangles(self) -> tuple[int, ...]:
        return tuple(leg.triangle for leg in self.legs)

    @property
    def start_point(self) -> np.ndarray:
        return np.asarray(self.legs[0].entry)

    @property
    def end_point(self) -> np.ndarray:
        return np.asarray(self.legs[-1].exit)

    @property
    def end_frame(self) -> Frame:
        return self.legs[-1].frame

    @property
    def last_triangle(self) -> int:
        return self.legs[-1].triangle

    @property
    def development(self) -> np.ndarray:
        """Start, every crossing point and the end, shape ``(n, 2)``."""
        return np.array([self.legs[0].entry, *(leg.exit for leg in self.legs)])

    @property
    def branch_choices(self) -> tuple[int, ...]:
        """Triangles entered at branching edges, in order."""
        return tuple(c.entered for c in self.crossings if c.degree >= 3)

    @property
    def reverse_choices(self) -> tuple[int, ...]:
        """Branch choices of the same path walked backwards."""
        return tuple(c.left for c in reversed(self.crossings) if c.degree >= 3)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.direction, AngleExpr)

    def reverse_start(self, complex_: TriangleComplex) -> tuple[StartPoint, Angle]:
        """Start point and launch angle that retrace this path backwards."""
        start = StartPoint(self.end.location, self.end.triangle)
        if isinstance(self.end.location, InteriorPoint):
            local = self.end_frame.to_local(reverse(self.direction), complex_)
            angle = principal(local, complex_)
            if numeric(angle, complex_) < 0:
                angle = angle + TWO_PI if isinstance(angle, AngleExpr) else angle + 2 * math.pi
            return start, angle
        assert self.end.arrival is not None
        return start, self.end.arrival

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_dict(),
            "angle": self.angle,
            "length": self.length,
            "triangles": list(self.triangles),
            "crossings": [c.to_dict() for c in self.crossings],
            "development": [list(map(float, p)) for p in self.development],
            "end": self.end.to_dict(),
        }


@dataclass(frozen=True)
class BranchPolicy:
    """What to do at a branching edge.

    ``stop`` ends the trace there. ``enumerate`` reports the stopped path and
    also continues into every other triangle at the edge, up to
    ``max_depth`` branchings. ``fixed`` continues into ``choices[k]`` at the
    k-th branching edge and stops once the list runs out.
    """

    mode: Literal["stop", "enumerate", "fixed"] = "stop"
    choices: tuple[int, ...] = ()
    max_depth: int = 4

    @classmethod
    def stop(cls) -> BranchPolicy:
        return cls("stop")

    @classmethod
    def enumerate(cls, max_depth: int = 4) -> BranchPolicy:
        return cls("enumerate", (), max_depth)

    @classmethod
    def fixed(cls, choices: Sequence[int]) -> BranchPolicy:
        return cls("fixed", tuple(choices), len(choices))


@dataclass
class _State:
    frame: Frame
    point: np.ndarray
    remaining: float
    exclude: frozenset[EdgeKey]
    legs: tuple[Leg, ...] = ()
    crossings: tuple[Crossing, ...] = ()
    depth: int = 0


def _is_between(complex_: TriangleComplex, angle: Angle, low: Angle, high: Angle) -> bool:
    if isinstance(angle, AngleExpr) and isinstance(low, AngleExpr) and isinstance(high, AngleExpr):
        env, tol = complex_.atom_env, complex_.tolerance
        return compare(angle, low, env, tol) > 0 and compare(angle, high, env, tol) < 0
    value = numeric(angle, complex_)
    return numeric(low, complex_) < value < numeric(high, complex_)


def _launch(
    complex_: TriangleComplex, start: StartPoint, angle: Angle, frame: Frame, vertex_tolerance: float
) -> tuple[np.ndarray, Angle, frozenset[EdgeKey]]:
    tri = complex_.triangle(start.triangle)
    location = start.location

    if isinstance(location, InteriorPoint):
        if location.triangle != start.triangle:
            raise TriangleNotIncident(f"Interior point lies in triangle {location.triangle}, not {start.triangle}")
        p = np.asarray(location.xy, dtype=float)
        corners = tri.local_points
        for i in range(3):
            a, b = corners[i], corners[(i + 1) % 3]
            if cross2(b - a, p - a) < -_STEP_EPSILON:
                raise InvalidDirection(f"Point {location.xy} is outside triangle {tri.id}")
        if not math.isfinite(numeric(angle, complex_)):
            raise InvalidDirection(f"Launch angle {angle} is not finite")
        return frame.place(complex_, p), frame.direction(angle, complex_), frozenset()

    if isinstance(location, EdgePoint):
        a, b = location.edge
        if not tri.contains_edge(location.edge):
            raise TriangleNotIncident(f"Triangle {tri.id} does not contain edge {a},{b}")
        length = complex_.edge(location.edge).length
        if not vertex_tolerance < location.offset < length - vertex_tolerance:
            raise InvalidDirection(
                f"Offset {location.offset} is not inside edge {a},{b} of length {length}",
                fix_suggestion="Offsets are measured from the smaller endpoint and must avoid both endpoints.",
            )
        if not _is_between(complex_, angle, ZERO, PI):
            raise InvalidDirection(f"Launch angle {angle} from an edge must lie strictly between 0 and π")
        pa, pb = tri.local_point(a), tri.local_point(b)
        p = pa + (pb - pa) * (location.offset / length)
        side = tri.orientation(a, b, tri.third(a, b))
        local = tri.local_direction(a, b) + angle * side if isinstance(angle, AngleExpr) else (
            complex_.numeric(tri.local_direction(a, b)) + side * angle
        )
        return frame.place(complex_, p), frame.direction(local, complex_), frozenset({location.edge})

    vertex = location.vertex
    if vertex not in tri.vertices:
        raise TriangleNotIncident(f"Triangle {tri.id} does not contain vertex {vertex}")
    w1, w2 = sorted(w for w in tri.vertices if w != vertex)
    corner = tri.angle_at(vertex)
    if not _is_between(complex_, angle, ZERO, corner):
        raise InvalidDirection(f"Launch angle {angle} at {vertex} must lie strictly inside the corner angle {corner}")
    side = tri.orientation(vertex, w1, w2)
    local = tri.local_direction(vertex, w1) + angle * side if isinstance(angle, AngleExpr) else (
        complex_.numeric(tri.local_direction(vertex, w1)) + side * angle
    )
    return (
        frame.place(complex_, tri.local_point(vertex)),
        frame.direction(local, complex_),
        frozenset({edge_key(vertex, w1), edge_key(vertex, w2)}),
    )


def _unsigned(angle: Angle, complex_: TriangleComplex) -> Angle:
    reduced = principal(angle, complex_)
    if numeric(reduced, complex_) < 0:
        return -reduced
    return reduced


def edge_arrival(complex_: TriangleComplex, frame: Frame, key: EdgeKey, direction: Angle) -> Angle:
    """Angle from the edge direction to the reversed path, inside the frame's triangle."""
    edge_direction = frame.side_direction(complex_, *key)
    back = reverse(direction)
    if isinstance(back, AngleExpr):
        return _unsigned(back - edge_direction, complex_)
    return _unsigned(back - complex_.numeric(edge_direction), complex_)


def vertex_arrival(complex_: TriangleComplex, frame: Frame, vertex: str, direction: Angle) -> Angle:
    """Angle from the side towards the smaller neighbour to the reversed path."""
    tri = complex_.triangle(frame.triangle)
    first = min(w for w in tri.vertices if w != vertex)
    side = frame.side_direction(complex_, vertex, first)
    back = reverse(direction)
    if isinstance(back, AngleExpr):
        return _unsigned(back - side, complex_)
    return _unsigned(back - complex_.numeric(side), complex_)


def _warn_unless_locally_cat0(complex_: TriangleComplex) -> None:
    if complex_ not in _LOCALLY_CAT0:
        report = check_local_cat0(complex_)
        _LOCALLY_CAT0[complex_] = report.passed
        if not report.passed:
            logger.warning(
                "Tracing in a complex that is not locally CAT(0); straight paths need not be geodesics",
                extra={"vertices": [f.vertex for f in report.failures]},
            )


def _path(start: StartPoint, angle: Angle, direction: Angle, state: _State, end: EndStatus) -> GeodesicPath:
    return GeodesicPath(start, angle, direction, state.legs, state.crossings, end)


def _as_tuple(p: np.ndarray) -> tuple[float, float]:
    return (float(p[0]), float(p[1]))


def trace(
    complex_: TriangleComplex,
    start: StartPoint,
    angle: Angle,
    budget: float,
    policy: BranchPolicy = BranchPolicy(),
    frame: Optional[Frame] = None,
    vertex_tolerance: float = DEFAULT_TOLERANCE,
) -> Union[GeodesicPath, list[GeodesicPath]]:
    """Trace a straight path.

    Returns one path for the ``stop`` and ``fixed`` policies and every
    continuation (in depth-first order, branches by triangle id) for
    ``enumerate``. ``frame`` places the start triangle in an existing
    development; by default the start triangle's own frame is used.

    Raises:
        ZeroBudget: ``budget`` is not positive.
        InvalidDirection: The launch angle leaves the start triangle, or the
            start point is not interior to its edge or triangle.
        TriangleNotIncident: The start triangle does not contain the start
            point, or a fixed choice does not contain the branching edge.
    """
    paths = trace_all(complex_, start, angle, budget, policy, frame, vertex_tolerance)
    return paths if policy.mode == "enumerate" else paths[0]


def trace_all(
    complex_: TriangleComplex,
    start: StartPoint,
    angle: Angle,
    budget: float,
    policy: BranchPolicy = BranchPolicy(),
    frame: Optional[Frame] = None,
    vertex_tolerance: float = DEFAULT_TOLERANCE,
) -> list[GeodesicPath]:
    """Like :func:`trace`, always returning a list."""
    if not budget > 0:
        raise ZeroBudget(f"Trace budget must be positive, got {budget}", fix_suggestion="Pass --budget > 0.")
    _warn_unless_locally_cat0(complex_)
    frame = frame or Frame(start.triangle)
    if frame.triangle != start.triangle:
        raise TriangleNotIncident(f"Frame is for triangle {frame.triangle}, start is in {start.triangle}")
    point, direction, exclude = _launch(complex_, start, angle, frame, vertex_tolerance)
    step = unit(direction, complex_)

    results: list[GeodesicPath] = []
    stack = [_State(frame, point, float(budget), exclude)]
    while stack:
        state = stack.pop()
        tri = complex_.triangle(state.frame.triangle)
        corners = {v: state.frame.corner(complex_, v) for v in tri.vertices}

        best: Optional[tuple[float, float, EdgeKey]] = None
        for key in tri.edge_keys():
            if key in state.exclude:
                continue
            a, b = corners[key[0]], corners[key[1]]
            side = b - a
            denom = cross2(step, side)
            if abs(denom) < 1e-15:
                continue
            along = cross2(a - state.point, side) / denom
            mu = cross2(a - state.point, step) / denom
            if along > _STEP_EPSILON and -1e-9 <= mu <= 1 + 1e-9 and (best is None or along < best[0]):
                best = (along, min(max(mu, 0.0), 1.0), key)

        if best is None or state.remaining < best[0]:
            reach = state.remaining if best is None else min(state.remaining, best[0])
            end_point = state.point + step * reach
            leg = Leg(tri.id, state.frame, _as_tuple(state.point), _as_tuple(end_point))
            state.legs = state.legs + (leg,)
            local = state.frame.unplace(complex_, end_point)
            location = InteriorPoint(tri.id, _as_tuple(local))
            results.append(_path(start, angle, direction, state, EndStatus(EndKind.BUDGET_EXHAUSTED, tri.id, location)))
            continue

        along, mu, key = best
        hit = state.point + step * along
        state.legs = state.legs + (Leg(tri.id, state.frame, _as_tuple(state.point), _as_tuple(hit)),)
        remaining = state.remaining - along

        near = [v for v, c in sorted(corners.items()) if float(np.linalg.norm(hit - c)) < vertex_tolerance]
        if near:
            vertex = near[0]
            arrival = vertex_arrival(complex_, state.frame, vertex, direction)
            end = EndStatus(EndKind.HIT_VERTEX, tri.id, VertexPoint(vertex), arrival)
            results.append(_path(start, angle, direction, state, end))
            continue

        edge = complex_.edge(key)
        location = EdgePoint(key, mu * edge.length)
        arrival = edge_arrival(complex_, state.frame, key, direction)
        if edge.degree == 1:
            results.append(_path(start, angle, direction, state, EndStatus(EndKind.HIT_BOUNDARY, tri.id, location, arrival)))
            continue

        others = sorted(t for t in edge.triangles if t != tri.id)
        if edge.degree == 2:
            nexts = others
        else:
            stopped = EndStatus(EndKind.HIT_BRANCHING_EDGE, tri.id, location, arrival)
            if policy.mode == "stop":
                results.append(_path(start, angle, direction, state, stopped))
                continue
            if policy.mode == "fixed":
                if state.depth >= len(policy.choices):
                    results.append(_path(start, angle, direction, state, stopped))
                    continue
                choice = policy.choices[state.depth]
                if choice not in others:
                    raise TriangleNotIncident(f"Branch choice {choice} does not contain edge {key[0]},{key[1]}")
                nexts = [choice]
            else:
                results.append(_path(start, angle, direction, state, stopped))
                if state.depth >= policy.max_depth:
                    continue
                nexts = others

        depth = state.depth + (1 if edge.degree >= 3 else 0)
        for other in reversed(nexts):
            crossing = Crossing(key, location.offset, _as_tuple(hit), arrival, edge.degree, tri.id, other)
            stack.append(
                _State(
                    cross_edge(complex_, state.frame, key[0], key[1], other),
                    hit,
                    remaining,
                    frozenset({key}),
                    state.legs,
                    state.crossings + (crossing,),
                    depth,
                )
            )

    logger.debug("Traced", extra={"start": str(start), "paths": len(results), "policy": policy.mode})
    return results


def shoot_perpendicular(
    complex_: TriangleComplex,
    edge: EdgeKey,
    offset: float,
    triangle: int,
    budget: float,
    policy: BranchPolicy = BranchPolicy(),
    frame: Optional[Frame] = None,
    vertex_tolerance: float = DEFAULT_TOLERANCE,
) -> Union[GeodesicPath, list[GeodesicPath]]:
    """Trace from an edge point at exactly π/2 into ``triangle``.

    Raises:
        TriangleNotIncident: ``triangle`` does not contain ``edge``.
        InvalidDirection: ``offset`` is not interior to the edge.
    """
    key = edge_key(*edge)
    complex_.edge(key)
    if not complex_.triangle(triangle).contains_edge(key):
        raise TriangleNotIncident(f"Triangle {triangle} does not contain edge {key[0]},{key[1]}")
    return trace(complex_, StartPoint.on_edge(key, offset, triangle), HALF_PI, budget, policy, frame, vertex_tolerance)


def retrace(complex_: TriangleComplex, path: GeodesicPath, frame: Optional[Frame] = None) -> GeodesicPath:
    """Trace ``path`` again, optionally placed in another development."""
    policy = BranchPolicy.fixed(path.branch_choices)
    stops_inside = path.end.kind in (EndKind.BUDGET_EXHAUSTED, EndKind.REACHED)
    budget = path.length if stops_inside else path.length + 1e-7
    result = trace(complex_, path.start, path.angle, budget, policy, frame)
    assert isinstance(result, GeodesicPath)
    return result
