"""Point-to-point geodesics by corridor propagation.

From a source (the start point or a vertex) straight segments are found by
unfolding corridors of triangles and narrowing the visible window at every
crossed edge. Straight segments between the start, the target and the
vertices form a graph; the shortest route through it is the geodesic, bent
only at vertices.
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import networkx as nx
import numpy as np

from tits.alternative.complexes import EdgeKey, TriangleComplex
from tits.alternative.exceptions import BudgetTooSmall, ComplexInputError, NotSimplyConnectedAsserted
from tits.alternative.geodesics.development import Frame, cross2, cross_edge, principal
from tits.alternative.geodesics.local import LocalGeodesicReport, PiecewiseGeodesic, verify_local_geodesic
from tits.alternative.geodesics.tracer import (
    Crossing,
    EdgePoint,
    EndKind,
    EndStatus,
    GeodesicPath,
    InteriorPoint,
    Leg,
    StartPoint,
    VertexPoint,
    edge_arrival,
    vertex_arrival,
)

logger = logging.getLogger(__name__)

_WINDOW_EPSILON = 1e-12
_MAX_WINDOWS = 200_000

Node = Union[str, tuple[str]]
_START: Node = ("start",)
_TARGET: Node = ("target",)


@dataclass(frozen=True)
class _Corridor:
    frames: tuple[Frame, ...]
    portals: tuple[EdgeKey, ...]


@dataclass(frozen=True)
class _Segment:
    length: float
    source: Node
    target: Node
    corridor: _Corridor
    start: np.ndarray
    end: np.ndarray


@dataclass(order=True)
class _Window:
    distance: float
    order: int
    corridor: _Corridor = field(compare=False)
    left: np.ndarray = field(compare=False)
    right: np.ndarray = field(compare=False)


def _local_point(complex_: TriangleComplex, point: StartPoint) -> np.ndarray:
    location = point.location
    tri = complex_.triangle(point.triangle)
    if isinstance(location, InteriorPoint):
        return np.asarray(location.xy, dtype=float)
    if isinstance(location, EdgePoint):
        a, b = location.edge
        pa, pb = tri.local_point(a), tri.local_point(b)
        return pa + (pb - pa) * (location.offset / complex_.edge(location.edge).length)
    return tri.local_point(location.vertex)


def _triangles_of(complex_: TriangleComplex, point: StartPoint) -> list[int]:
    location = point.location
    if isinstance(location, VertexPoint):
        return complex_.star(location.vertex)
    if isinstance(location, EdgePoint):
        return sorted(complex_.edge(location.edge).triangles)
    return [point.triangle]


def _on_boundary_of(location, key: EdgeKey) -> bool:
    if isinstance(location, VertexPoint):
        return location.vertex in key
    if isinstance(location, EdgePoint):
        return location.edge == key
    return False


def _clip(source: np.ndarray, left: np.ndarray, right: np.ndarray, a: np.ndarray, b: np.ndarray) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """The part of segment ``ab`` strictly inside the cone from ``source`` through ``left``..``right``."""
    dl, dr = left - source, right - source
    if cross2(dl, dr) < 0:
        dl, dr = dr, dl
    low, high = 0.0, 1.0
    for direction, sign in ((dl, 1.0), (dr, -1.0)):
        # sign * cross(direction, a + t(b - a) - source) >= 0
        c0 = sign * cross2(direction, a - source)
        c1 = sign * cross2(direction, b - a)
        if abs(c1) < 1e-15:
            if c0 < -_WINDOW_EPSILON:
                return None
            continue
        root = -c0 / c1
        if c1 > 0:
            low = max(low, root)
        else:
            high = min(high, root)
    if high - low <= 0:
        return None
    start, end = a + (b - a) * low, a + (b - a) * high
    if float(np.linalg.norm(end - start)) < _WINDOW_EPSILON:
        return None
    return start, end


def _segment_distance(point: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    direction = b - a
    t = float(np.clip(np.dot(point - a, direction) / np.dot(direction, direction), 0.0, 1.0))
    return float(np.linalg.norm(point - (a + direction * t)))


def _visible(source: np.ndarray, left: np.ndarray, right: np.ndarray, target: np.ndarray) -> bool:
    dl, dr = left - source, right - source
    if cross2(dl, dr) < 0:
        dl, dr = dr, dl
    offset = target - source
    return cross2(dl, offset) > _WINDOW_EPSILON and cross2(dr, offset) < -_WINDOW_EPSILON


class _Propagation:
    """Straight segments from one source to every reachable target."""

    def __init__(self, complex_: TriangleComplex, source: Node, point: StartPoint, target: StartPoint, budget: float):
        self.complex_ = complex_
        self.source = source
        self.point = point
        self.target = target
        self.budget = budget
        self.best: dict[Node, _Segment] = {}
        self.windows = 0

    def _targets_in(self, frame: Frame, entry: Optional[EdgeKey]) -> list[tuple[Node, np.ndarray]]:
        tri = self.complex_.triangle(frame.triangle)
        found: list[tuple[Node, np.ndarray]] = []
        for v in tri.vertices:
            if entry is not None and v in entry:
                continue
            if isinstance(self.point.location, VertexPoint) and self.point.location.vertex == v:
                continue
            found.append((v, frame.corner(self.complex_, v)))
        target_location = self.target.location
        if frame.triangle in _triangles_of(self.complex_, self.target) and not isinstance(target_location, VertexPoint):
            if entry is None or not _on_boundary_of(target_location, entry):
                local = _local_point(self.complex_, StartPoint(target_location, frame.triangle))
                found.append((_TARGET, frame.place(self.complex_, local)))
        return found

    def _offer(self, node: Node, corridor: _Corridor, start: np.ndarray, end: np.ndarray) -> None:
        length = float(np.linalg.norm(end - start))
        if length > self.budget or length < _WINDOW_EPSILON:
            return
        known = self.best.get(node)
        if known is None or length < known.length - 1e-12:
            self.best[node] = _Segment(length, self.source, node, corridor, start, end)

    def run(self) -> dict[Node, _Segment]:
        queue: list[_Window] = []
        counter = 0
        for first in _triangles_of(self.complex_, self.point):
            frame = Frame(first)
            source = frame.place(self.complex_, _local_point(self.complex_, StartPoint(self.point.location, first)))
            corridor = _Corridor((frame,), ())
            for node, position in self._targets_in(frame, None):
                self._offer(node, corridor, source, position)
            tri = self.complex_.triangle(first)
            for key in tri.edge_keys():
                if _on_boundary_of(self.point.location, key):
                    continue
                a, b = frame.corner(self.complex_, key[0]), frame.corner(self.complex_, key[1])
                self._push(queue, counter, corridor, key, source, a, b)
                counter += len(self.complex_.edge(key).triangles)

            while queue:
                window = heapq.heappop(queue)
                self.windows += 1
                if self.windows > _MAX_WINDOWS:
                    logger.warning("Window limit reached", extra={"source": str(self.source), "limit": _MAX_WINDOWS})
                    queue.clear()
                    break
                frame = window.corridor.frames[-1]
                entry = window.corridor.portals[-1]
                for node, position in self._targets_in(frame, entry):
                    if _visible(source, window.left, window.right, position):
                        self._offer(node, window.corridor, source, position)
                tri = self.complex_.triangle(frame.triangle)
                for key in tri.edge_keys():
                    if key == entry:
                        continue
                    a, b = frame.corner(self.complex_, key[0]), frame.corner(self.complex_, key[1])
                    clipped = _clip(source, window.left, window.right, a, b)
                    if clipped is None:
                        continue
                    self._push(queue, counter, window.corridor, key, source, *clipped)
                    counter += len(self.complex_.edge(key).triangles)
        return self.best

    def _push(self, queue: list[_Window], counter: int, corridor: _Corridor, key: EdgeKey, source: np.ndarray, left: np.ndarray, right: np.ndarray) -> None:
        distance = _segment_distance(source, left, right)
        if distance > self.budget:
            return
        frame = corridor.frames[-1]
        for k, other in enumerate(sorted(t for t in self.complex_.edge(key).triangles if t != frame.triangle)):
            glued = cross_edge(self.complex_, frame, key[0], key[1], other)
            heapq.heappush(
                queue,
                _Window(distance, counter + k, _Corridor(corridor.frames + (glued,), corridor.portals + (key,)), left, right),
            )


def _point_of(node: Node, start: StartPoint, target: StartPoint, triangle: int) -> StartPoint:
    if node == _START:
        return StartPoint(start.location, triangle)
    if node == _TARGET:
        return StartPoint(target.location, triangle)
    return StartPoint(VertexPoint(node), triangle)  # type: ignore[arg-type]


def _launch_angle(complex_: TriangleComplex, point: StartPoint, frame: Frame, direction: float) -> float:
    location = point.location
    if isinstance(location, InteriorPoint):
        local = frame.to_local(direction, complex_)
        return float(local % (2 * math.pi))
    if isinstance(location, EdgePoint):
        reference = complex_.numeric(frame.side_direction(complex_, *location.edge))
    else:
        tri = complex_.triangle(frame.triangle)
        first = min(w for w in tri.vertices if w != location.vertex)
        reference = complex_.numeric(frame.side_direction(complex_, location.vertex, first))
    return abs(float(principal(direction - reference, complex_)))


def _piece(complex_: TriangleComplex, segment: _Segment, start: StartPoint, target: StartPoint) -> GeodesicPath:
    frames = segment.corridor.frames
    origin = _point_of(segment.source, start, target, frames[0].triangle)
    finish = _point_of(segment.target, start, target, frames[-1].triangle)
    offset = segment.end - segment.start
    direction = math.atan2(float(offset[1]), float(offset[0]))
    step = offset / segment.length

    legs, crossings = [], []
    entry = segment.start
    for here, there, key in zip(frames, frames[1:], segment.corridor.portals):
        a, b = here.corner(complex_, key[0]), here.corner(complex_, key[1])
        side = b - a
        along = cross2(a - entry, side) / cross2(step, side)
        mu = float(np.clip(cross2(a - entry, step) / cross2(step, side), 0.0, 1.0))
        hit = entry + step * along
        legs.append(Leg(here.triangle, here, (float(entry[0]), float(entry[1])), (float(hit[0]), float(hit[1]))))
        edge = complex_.edge(key)
        crossings.append(
            Crossing(key, mu * edge.length, (float(hit[0]), float(hit[1])), edge_arrival(complex_, here, key, direction), edge.degree, here.triangle, there.triangle)
        )
        entry = hit
    last = frames[-1]
    legs.append(Leg(last.triangle, last, (float(entry[0]), float(entry[1])), (float(segment.end[0]), float(segment.end[1]))))

    location = finish.location
    if isinstance(location, VertexPoint):
        arrival = vertex_arrival(complex_, last, location.vertex, direction)
    elif isinstance(location, EdgePoint):
        arrival = edge_arrival(complex_, last, location.edge, direction)
    else:
        arrival = None
    end = EndStatus(EndKind.REACHED, last.triangle, location, arrival)
    angle = _launch_angle(complex_, origin, frames[0], direction)
    return GeodesicPath(origin, angle, direction, tuple(legs), tuple(crossings), end)


def geodesic_between(
    complex_: TriangleComplex,
    start: StartPoint,
    target: StartPoint,
    budget: float,
    assume_simply_connected: bool = False,
) -> tuple[PiecewiseGeodesic, LocalGeodesicReport]:
    """Shortest path from ``start`` to ``target`` of length at most ``budget``.

    Returns the path and its local geodesic report. In a CAT(0) complex the
    result is the unique geodesic.

    Raises:
        NotSimplyConnectedAsserted: ``assume_simply_connected`` is not set.
        ComplexInputError: The two points coincide.
        BudgetTooSmall: No route of length at most ``budget`` exists.
    """
    if not assume_simply_connected:
        raise NotSimplyConnectedAsserted()
    for point in (start, target):
        complex_.triangle(point.triangle)
    if _same_point(complex_, start, target):
        raise ComplexInputError("Geodesic endpoints coincide", fix_suggestion="Pick two distinct points.")

    graph = nx.DiGraph()
    graph.add_node(_START)
    graph.add_node(_TARGET)
    sources: list[tuple[Node, StartPoint]] = [(_START, start)]
    sources.extend((v, StartPoint(VertexPoint(v), complex_.star(v)[0])) for v in sorted(complex_.vertices) if complex_.star(v))
    windows = 0
    for node, point in sources:
        if isinstance(start.location, VertexPoint) and node == start.location.vertex:
            continue
        propagation = _Propagation(complex_, node, point, target, budget)
        for reached, segment in propagation.run().items():
            if reached == _START:
                continue
            if isinstance(start.location, VertexPoint) and reached == start.location.vertex:
                continue
            if isinstance(target.location, VertexPoint) and reached == target.location.vertex:
                reached = _TARGET
                segment = _Segment(segment.length, segment.source, _TARGET, segment.corridor, segment.start, segment.end)
            known = graph.get_edge_data(node, reached)
            if known is None or segment.length < known["weight"]:
                graph.add_edge(node, reached, weight=segment.length, segment=segment)
        windows += propagation.windows

    try:
        length, route = nx.single_source_dijkstra(graph, _START, _TARGET, weight="weight")
    except nx.NetworkXNoPath:
        raise BudgetTooSmall(
            f"No path within budget {budget}",
            fix_suggestion="Raise --budget.",
            data={"budget": budget},
        ) from None
    if length > budget:
        raise BudgetTooSmall(f"Shortest path has length {length:.6g} > budget {budget}", data={"budget": budget, "length": length})

    pieces = tuple(_piece(complex_, graph.edges[u, v]["segment"], start, target) for u, v in zip(route, route[1:]))
    path = PiecewiseGeodesic(pieces)
    report = verify_local_geodesic(complex_, path)
    logger.info("Found geodesic", extra={"length": length, "pieces": len(pieces), "windows": windows, "ok": report.ok})
    return path, report


def _same_point(complex_: TriangleComplex, p: StartPoint, q: StartPoint) -> bool:
    a, b = p.location, q.location
    if isinstance(a, VertexPoint) and isinstance(b, VertexPoint):
        return a.vertex == b.vertex
    if isinstance(a, EdgePoint) and isinstance(b, EdgePoint):
        return a.edge == b.edge and abs(a.offset - b.offset) < 1e-12
    if isinstance(a, InteriorPoint) and isinstance(b, InteriorPoint):
        return a.triangle == b.triangle and math.dist(a.xy, b.xy) < 1e-12
    return False
