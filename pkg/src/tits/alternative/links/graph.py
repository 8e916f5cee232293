"""Metric link graphs at vertices and at edge-interior points.

Nodes are the directions along edges of X at the point: at a vertex ``v`` a
node is named by the neighbouring vertex ``w`` of the edge ``vw``; at an
edge-interior point the two nodes are the edge's endpoints. Arcs are keyed by
the id of the triangle whose corner they represent, so a link is a
``networkx.MultiGraph`` with integer edge keys.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from tits.alternative.algebra import PI, ZERO, AngleExpr, AtomEnv
from tits.alternative.complexes.model import EdgeKey, TriangleComplex, edge_key
from tits.alternative.exceptions import UnknownVertex

Length = Union[AngleExpr, float]


@dataclass(frozen=True)
class Arc:
    """One arc of a link."""

    key: int
    u: str
    v: str
    length: AngleExpr
    numeric: float

    def other(self, node: str) -> str:
        """The endpoint that is not ``node``."""
        return self.v if node == self.u else self.u


@dataclass(frozen=True)
class Girth:
    """A shortest cycle: exact length (``None`` for forests), numeric length, arc keys."""

    exact: Optional[AngleExpr]
    numeric: float
    cycle: tuple[int, ...]

    @property
    def is_finite(self) -> bool:
        """False for forests."""
        return self.exact is not None


@dataclass(frozen=True)
class LinkPoint:
    """A direction at the link's center: a point on an arc.

    ``offset`` is measured along the arc from node ``start``.
    """

    arc: int
    start: str
    offset: Length


@dataclass(frozen=True)
class LinkDistance:
    """Distance between two directions, exact when every input was exact."""

    exact: Optional[AngleExpr]
    numeric: float


class LinkGraph:
    """A finite metric graph of directions at a point of a complex."""

    def __init__(self, center: str, kind: str, env: AtomEnv, arcs: Iterable[Arc], nodes: Iterable[str] = ()) -> None:
        self.center = center
        self.kind = kind
        self.env = env
        self.graph = nx.MultiGraph()
        self.graph.add_nodes_from(sorted(nodes))
        self._arcs: dict[int, Arc] = {}
        for arc in sorted(arcs, key=lambda a: a.key):
            self._arcs[arc.key] = arc
            self.graph.add_edge(arc.u, arc.v, key=arc.key, length=arc.numeric)

    @property
    def arcs(self) -> list[Arc]:
        """Arcs sorted by key."""
        return list(self._arcs.values())

    @property
    def nodes(self) -> list[str]:
        """Node ids, sorted."""
        return sorted(self.graph.nodes)

    def arc(self, key: int) -> Arc:
        """Arc by key."""
        return self._arcs[key]

    def degree(self, node: str) -> int:
        """Number of arc ends at ``node``."""
        return self.graph.degree(node)

    def incident(self, node: str) -> list[Arc]:
        """Arcs at ``node``, sorted by key."""
        return sorted((self._arcs[k] for _, _, k in self.graph.edges(node, keys=True)), key=lambda a: a.key)

    def total_length(self) -> AngleExpr:
        """Exact sum of arc lengths."""
        total = ZERO
        for arc in self.arcs:
            total = total + arc.length
        return total

    def restricted(self, keys: Iterable[int]) -> LinkGraph:
        """The subgraph made of the given arcs and their endpoints."""
        chosen = [self._arcs[k] for k in keys]
        return LinkGraph(self.center, self.kind, self.env, chosen, {n for a in chosen for n in (a.u, a.v)})

    def cheapest_arc(self, u: str, v: str, exclude: Optional[int] = None) -> Arc:
        """The shortest arc joining ``u`` and ``v``; ties go to the smaller key."""
        candidates = [self._arcs[k] for k in self.graph[u][v] if k != exclude]
        return min(candidates, key=lambda a: (a.numeric, a.key))

    def path_arcs(self, nodes: list[str], exclude: Optional[int] = None) -> list[Arc]:
        """Arcs realizing a node path, cheapest arc per step."""
        return [self.cheapest_arc(a, b, exclude) for a, b in zip(nodes, nodes[1:])]

    def to_dict(self) -> dict:
        """Nodes and arcs for reports."""
        return {
            "center": self.center,
            "kind": self.kind,
            "nodes": self.nodes,
            "arcs": [{"triangle": a.key, "ends": [a.u, a.v], "length": a.length, "numeric": a.numeric} for a in self.arcs],
        }


def link_of_vertex(complex_: TriangleComplex, vertex: str) -> LinkGraph:
    """Link at a vertex: one node per edge at ``vertex``, one arc per corner.

    Raises:
        UnknownVertex: ``vertex`` is not in the complex.
    """
    if vertex not in complex_.vertices:
        raise UnknownVertex(vertex)
    arcs = []
    for t in complex_.star(vertex):
        tri = complex_.triangle(t)
        a, b = sorted(w for w in tri.vertices if w != vertex)
        angle = tri.angle_at(vertex)
        arcs.append(Arc(t, a, b, angle, complex_.numeric(angle)))
    nodes = [e.key[0] if e.key[1] == vertex else e.key[1] for e in complex_.edges_at(vertex)]
    return LinkGraph(vertex, "vertex", complex_.atom_env, arcs, nodes)


def link_of_edge_point(complex_: TriangleComplex, key: EdgeKey) -> LinkGraph:
    """Link at an interior point of an edge: two nodes and one length-π arc per triangle.

    Raises:
        UnknownEdge: ``key`` is not an edge.
    """
    e = complex_.edge(key)
    a, b = e.key
    arcs = [Arc(t, a, b, PI, math.pi) for t in e.triangles]
    return LinkGraph(f"{a},{b}", "edge", complex_.atom_env, arcs, [a, b])


def _shortest(link: LinkGraph, source: str, target: str, exclude: Optional[int] = None) -> Optional[tuple[float, list[str]]]:
    graph = link.graph
    removed = None
    if exclude is not None:
        arc = link.arc(exclude)
        removed = (arc.u, arc.v, exclude, graph.edges[arc.u, arc.v, exclude])
        graph.remove_edge(arc.u, arc.v, key=exclude)
    try:
        length, path = nx.single_source_dijkstra(graph, source, target, weight="length")
        return length, path
    except nx.NetworkXNoPath:
        return None
    finally:
        if removed is not None:
            graph.add_edge(removed[0], removed[1], key=removed[2], **removed[3])


def girth(link: LinkGraph) -> Girth:
    """Shortest cycle, found by removing each arc and joining its ends.

    Numeric lengths order the search; the winning cycle's length is summed
    exactly. Near-ties (within 1e-12) go to the lexicographically smaller
    sorted arc tuple.
    """
    best: Optional[tuple[float, tuple[int, ...], AngleExpr]] = None
    for arc in link.arcs:
        found = _shortest(link, arc.u, arc.v, exclude=arc.key)
        if found is None:
            continue
        numeric, path = found
        arcs = [arc, *link.path_arcs(path, exclude=arc.key)]
        total = numeric + arc.numeric
        key = tuple(sorted(a.key for a in arcs))
        exact = ZERO
        for a in arcs:
            exact = exact + a.length
        if best is None or total < best[0] - 1e-12 or (abs(total - best[0]) <= 1e-12 and key < best[1]):
            best = (total, key, exact)
    if best is None:
        return Girth(None, math.inf, ())
    return Girth(best[2], best[0], best[1])


def node_distances(link: LinkGraph, source: str) -> dict[str, tuple[float, AngleExpr]]:
    """Numeric and exact distances from a node to every reachable node."""
    lengths, paths = nx.single_source_dijkstra(link.graph, source, weight="length")
    result = {}
    for node, path in paths.items():
        exact = ZERO
        for a in link.path_arcs(path):
            exact = exact + a.length
        result[node] = (lengths[node], exact)
    return result


def link_distance(link: LinkGraph, p: LinkPoint, q: LinkPoint) -> LinkDistance:
    """Path distance in the link between two directions.

    This is the Alexandrov angle whenever it is below π.
    """
    arc_p, arc_q = link.arc(p.arc), link.arc(q.arc)
    exact_inputs = isinstance(p.offset, AngleExpr) and isinstance(q.offset, AngleExpr)

    def ends(point: LinkPoint, arc: Arc) -> list[tuple[str, Length]]:
        near = point.offset
        far = (arc.length - near) if isinstance(near, AngleExpr) else arc.numeric - near
        return [(point.start, near), (arc.other(point.start), far)]

    def value(x: Length) -> float:
        return x.numeric(link.env) if isinstance(x, AngleExpr) else float(x)

    candidates: list[tuple[float, Optional[AngleExpr]]] = []
    if p.arc == q.arc:
        if q.start != p.start:
            q = LinkPoint(q.arc, p.start, arc_q.length - q.offset if isinstance(q.offset, AngleExpr) else arc_q.numeric - q.offset)
        if exact_inputs and isinstance(q.offset, AngleExpr) and isinstance(p.offset, AngleExpr):
            diff = p.offset - q.offset
            if value(diff) < 0:
                diff = -diff
            candidates.append((value(diff), diff))
        else:
            candidates.append((abs(value(p.offset) - value(q.offset)), None))

    for node_p, to_p in ends(p, arc_p):
        distances = node_distances(link, node_p)
        for node_q, to_q in ends(q, arc_q):
            if node_q not in distances:
                continue
            numeric, exact = distances[node_q]
            total = value(to_p) + numeric + value(to_q)
            if exact_inputs and isinstance(to_p, AngleExpr) and isinstance(to_q, AngleExpr):
                candidates.append((total, to_p + exact + to_q))
            else:
                candidates.append((total, None))
    if not candidates:
        return LinkDistance(None, math.inf)
    numeric, exact = min(candidates, key=lambda c: c[0])
    return LinkDistance(exact, numeric)


def vertex_link_point(complex_: TriangleComplex, vertex: str, triangle: int, angle: Length) -> LinkPoint:
    """The direction at ``vertex`` inside ``triangle``, ``angle`` from the side toward the smaller neighbour."""
    tri = complex_.triangle(triangle)
    first = min(w for w in tri.vertices if w != vertex)
    return LinkPoint(triangle, first, angle)


def edge_link_point(key: EdgeKey, triangle: int, angle: Length) -> LinkPoint:
    """The direction at an edge point inside ``triangle``, ``angle`` from the edge direction toward ``key[1]``."""
    a, b = edge_key(*key)
    return LinkPoint(triangle, b, angle)
