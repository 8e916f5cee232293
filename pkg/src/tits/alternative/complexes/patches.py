"""Patch decomposition off the branching locus and patch completions.

A patch is a maximal set of triangles connected across edges of degree at
most 2. Its completion P̄ is the surface obtained by cutting along the
branching locus and along vertices: a vertex of X shows up once for each class
of patch corners that are joined across interior edges, and every boundary
side of a patch triangle is its own edge of P̄.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
from networkx.utils import UnionFind

from tits.alternative.complexes.model import EdgeKey, TriangleComplex

logger = logging.getLogger(__name__)

#: A corner of a patch triangle: (triangle id, vertex id).
Corner = tuple[int, str]

#: A boundary side of a patch triangle: (triangle id, edge key).
BoundarySide = tuple[int, EdgeKey]


@dataclass
class Patch:
    """One patch with its completion data.

    Attributes:
        id: Index in the decomposition.
        triangles: Triangle ids, sorted.
        interior_edges: Edges of X crossed inside the patch (degree 2, not branching).
        boundary_sides: Sides lying on ∂P: on the branching locus or free edges.
        orientation: Per-triangle sign relative to its stored vertex order, or
            ``None`` when no consistent orientation exists.
        corner_class: Completion vertex id for every patch corner.
    """

    id: int
    triangles: tuple[int, ...]
    interior_edges: tuple[EdgeKey, ...]
    boundary_sides: tuple[BoundarySide, ...]
    orientation: dict[int, int] | None
    corner_class: dict[Corner, str] = field(default_factory=dict)

    @property
    def orientable(self) -> bool:
        """Whether a consistent orientation was found."""
        return self.orientation is not None

    @cached_property
    def completion_vertices(self) -> list[str]:
        """Vertices of P̄, sorted."""
        return sorted(set(self.corner_class.values()))

    def euler_characteristic(self) -> int:
        """χ(P̄)."""
        return len(self.completion_vertices) - len(self.interior_edges) - len(self.boundary_sides) + len(self.triangles)

    def side_endpoints(self, side: BoundarySide) -> tuple[str, str]:
        """Completion vertices at the ends of a boundary side."""
        tri, (a, b) = side
        return self.corner_class[(tri, a)], self.corner_class[(tri, b)]

    def boundary_components(self) -> list[list[BoundarySide]]:
        """Boundary sides grouped by component of ∂P, each group sorted."""
        graph = nx.MultiGraph()
        for side in self.boundary_sides:
            graph.add_edge(*self.side_endpoints(side), side=side)
        groups = []
        for nodes in nx.connected_components(graph):
            sides = sorted(d["side"] for _, _, d in graph.subgraph(nodes).edges(data=True))
            groups.append(sides)
        return sorted(groups)

    def boundary_vertices(self) -> list[str]:
        """Completion vertices on ∂P."""
        return sorted({v for side in self.boundary_sides for v in self.side_endpoints(side)})

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "triangles": list(self.triangles),
            "interior_edges": [list(k) for k in self.interior_edges],
            "boundary": [[{"triangle": t, "edge": [a, b]} for t, (a, b) in component] for component in self.boundary_components()],
            "orientable": self.orientable,
            "euler_characteristic": self.euler_characteristic(),
            "completion_vertices": self.completion_vertices,
        }

    def dual_graph(self, complex_: TriangleComplex) -> nx.Graph:
        """Triangle adjacency across interior edges; edges carry ``edge`` keys."""
        graph = nx.Graph()
        graph.add_nodes_from(self.triangles)
        for key in self.interior_edges:
            t1, t2 = complex_.edge(key).triangles
            graph.add_edge(t1, t2, edge=key)
        return graph


def patches(complex_: TriangleComplex) -> list[Patch]:
    """Partition the triangles into patches and compute their completions."""
    groups = UnionFind(range(len(complex_.triangles)))
    for e in complex_.edges.values():
        if e.degree == 2:
            groups.union(*e.triangles)
    members: dict[int, list[int]] = {}
    for tri in complex_.triangles:
        members.setdefault(groups[tri.id], []).append(tri.id)

    result = []
    for index, tris in enumerate(sorted(sorted(m) for m in members.values())):
        result.append(_build_patch(complex_, index, tris))
    logger.debug("Decomposed into patches", extra={"patches": len(result)})
    return result


def _build_patch(complex_: TriangleComplex, index: int, tris: list[int]) -> Patch:
    inside = set(tris)
    interior: set[EdgeKey] = set()
    boundary: list[BoundarySide] = []
    for t in tris:
        for key in complex_.triangle(t).edge_keys():
            e = complex_.edge(key)
            if e.degree == 2 and set(e.triangles) <= inside:
                interior.add(key)
            else:
                boundary.append((t, key))

    corners = UnionFind([(t, v) for t in tris for v in complex_.triangle(t).vertices])
    for key in interior:
        t1, t2 = complex_.edge(key).triangles
        for v in key:
            corners.union((t1, v), (t2, v))
    classes: dict[str, list[list[Corner]]] = {}
    for group in corners.to_sets():
        members = sorted(group)
        classes.setdefault(members[0][1], []).append(members)
    corner_class: dict[Corner, str] = {}
    for vertex, groups in classes.items():
        groups.sort()
        for k, group in enumerate(groups):
            name = vertex if len(groups) == 1 else f"{vertex}#{k + 1}"
            for corner in group:
                corner_class[corner] = name

    return Patch(
        id=index,
        triangles=tuple(tris),
        interior_edges=tuple(sorted(interior)),
        boundary_sides=tuple(sorted(boundary)),
        orientation=_orient(complex_, tris, interior),
        corner_class=corner_class,
    )


def _orient(complex_: TriangleComplex, tris: list[int], interior: set[EdgeKey]) -> dict[int, int] | None:
    signs = {tris[0]: 1}
    queue = deque([tris[0]])
    while queue:
        t = queue.popleft()
        tri = complex_.triangle(t)
        for key in tri.edge_keys():
            if key not in interior:
                continue
            (other,) = [s for s in complex_.edge(key).triangles if s != t]
            a, b = key
            wanted = -signs[t] * tri.side_orientation(a, b) * complex_.triangle(other).side_orientation(a, b)
            if other not in signs:
                signs[other] = wanted
                queue.append(other)
            elif signs[other] != wanted:
                return None
    return signs
