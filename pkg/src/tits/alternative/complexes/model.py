"""Validated piecewise Euclidean triangle complexes."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Union

import networkx as nx
import numpy as np

from tits.alternative.algebra import PI, AngleExpr, AtomEnv, parse_angle
from tits.alternative.exceptions import (
    AngleSumViolation,
    DegenerateTriangle,
    LawOfSinesMismatch,
    NonSimplicial,
    SharedEdgeLengthMismatch,
    TriangleNotIncident,
    UnknownEdge,
    UnknownTriangle,
    UnknownVertex,
)
from tits.alternative.models import ComplexDocument

logger = logging.getLogger(__name__)

EdgeKey = tuple[str, str]

DEFAULT_TOLERANCE = 1e-9

_CYCLIC = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def edge_key(u: str, v: str) -> EdgeKey:
    """Canonical (sorted) key of the edge ``uv``."""
    return (u, v) if u <= v else (v, u)


def parse_edge(text: str) -> EdgeKey:
    """Parse the ``u,v`` spelling used on the command line."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise UnknownEdge(text)
    return edge_key(parts[0], parts[1])


@dataclass(frozen=True)
class Triangle:
    """A Euclidean triangle with exact corner angles.

    ``sides[i]`` is opposite ``vertices[i]``.
    """

    id: int
    vertices: tuple[str, str, str]
    angles: tuple[AngleExpr, AngleExpr, AngleExpr]
    sides: tuple[float, float, float]
    frame_angle: float = 0.0

    def index(self, vertex: str) -> int:
        """Corner index of ``vertex``."""
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise TriangleNotIncident(f"Triangle {self.id} does not contain vertex {vertex}") from None

    def angle_at(self, vertex: str) -> AngleExpr:
        """Corner angle at ``vertex``."""
        return self.angles[self.index(vertex)]

    def third(self, a: str, b: str) -> str:
        """The vertex other than ``a`` and ``b``."""
        (rest,) = [v for v in self.vertices if v not in (a, b)]
        return rest

    def contains_edge(self, key: EdgeKey) -> bool:
        """True iff both endpoints of ``key`` are corners."""
        return key[0] in self.vertices and key[1] in self.vertices

    def edge_keys(self) -> list[EdgeKey]:
        """The three sides as edge keys."""
        a, b, c = self.vertices
        return [edge_key(a, b), edge_key(b, c), edge_key(a, c)]

    def side_length(self, a: str, b: str) -> float:
        """Length of side ``ab``."""
        return self.sides[self.index(self.third(a, b))]

    def orientation(self, a: str, b: str, c: str) -> int:
        """+1 if ``(a, b, c)`` is a cyclic rotation of the stored order, else -1."""
        return 1 if (self.index(a), self.index(b), self.index(c)) in _CYCLIC else -1

    def side_orientation(self, a: str, b: str) -> int:
        """Orientation of the stored order seen from the directed side ``a→b``."""
        return self.orientation(a, b, self.third(a, b))

    def local_direction(self, a: str, b: str) -> AngleExpr:
        """Exact direction of the side ``a→b`` in the triangle's own frame.

        The frame puts corner 0 at the origin and side 0→1 along the positive
        x axis, with corner 2 above it.
        """
        i, j = self.index(a), self.index(b)
        a0, a1, _ = self.angles
        table = {
            (0, 1): AngleExpr(),
            (1, 0): PI,
            (0, 2): a0,
            (2, 0): PI + a0,
            (1, 2): PI - a1,
            (2, 1): -a1,
        }
        return table[(i, j)]

    @cached_property
    def local_points(self) -> np.ndarray:
        """Corner coordinates in the local frame, shape ``(3, 2)``.

        ``frame_angle`` is the numeric value of ``angles[0]``.
        """
        _, s1, s2 = self.sides
        theta = self.frame_angle
        return np.array([[0.0, 0.0], [s2, 0.0], [s1 * math.cos(theta), s1 * math.sin(theta)]])

    def local_point(self, vertex: str) -> np.ndarray:
        """Local coordinates of a corner."""
        return self.local_points[self.index(vertex)]


@dataclass(frozen=True)
class Edge:
    """An edge with the triangles that contain it."""

    key: EdgeKey
    length: float
    triangles: tuple[int, ...]

    @property
    def degree(self) -> int:
        """Number of triangles containing the edge."""
        return len(self.triangles)

    @property
    def label(self) -> str:
        """``u,v`` spelling."""
        return f"{self.key[0]},{self.key[1]}"


class TriangleComplex:
    """A finite simplicial 2-complex whose triangles are Euclidean.

    Angles are exact, lengths are numeric. Instances are immutable after
    construction; every constructor path validates.
    """

    def __init__(
        self,
        vertices: Sequence[str],
        triangles: Sequence[tuple[Sequence[str], Sequence[AngleExpr], Sequence[float]]],
        atom_env: AtomEnv | None = None,
        tolerance: float = DEFAULT_TOLERANCE,
    ) -> None:
        self.atom_env = atom_env or AtomEnv()
        self.tolerance = tolerance
        self.vertices: tuple[str, ...] = tuple(vertices)
        built = []
        for index, (verts, angles, sides) in enumerate(triangles):
            built.append(
                Triangle(
                    id=index,
                    vertices=(verts[0], verts[1], verts[2]),
                    angles=(angles[0], angles[1], angles[2]),
                    sides=(float(sides[0]), float(sides[1]), float(sides[2])),
                    frame_angle=angles[0].numeric(self.atom_env),
                )
            )
        self.triangles: tuple[Triangle, ...] = tuple(built)
        self._validate(set(vertices))
        self.edges: dict[EdgeKey, Edge] = self._build_edges()
        self._star: dict[str, list[int]] = {v: [] for v in self.vertices}
        for tri in self.triangles:
            for v in tri.vertices:
                self._star[v].append(tri.id)
        logger.debug(
            "Loaded complex",
            extra={"vertices": len(self.vertices), "edges": len(self.edges), "triangles": len(self.triangles)},
        )

    def _validate(self, declared: set[str]) -> None:
        seen: dict[frozenset[str], int] = {}
        for tri in self.triangles:
            if len(set(tri.vertices)) != 3:
                raise NonSimplicial(f"Triangle {tri.id} repeats a vertex: {list(tri.vertices)}")
            for v in tri.vertices:
                if v not in declared:
                    raise UnknownVertex(v)
            key = frozenset(tri.vertices)
            if key in seen:
                raise NonSimplicial(f"Triangles {seen[key]} and {tri.id} share the vertex triple {sorted(key)}")
            seen[key] = tri.id

            numeric = [a.numeric(self.atom_env) for a in tri.angles]
            if any(a <= 0 for a in numeric) or any(s <= 0 for s in tri.sides):
                raise DegenerateTriangle(f"Triangle {tri.id} has a non-positive angle or side")
            total = tri.angles[0] + tri.angles[1] + tri.angles[2]
            if total != PI:
                raise AngleSumViolation(tri.id, str(total))
            ratios = [s / math.sin(a) for s, a in zip(tri.sides, numeric)]
            if max(ratios) - min(ratios) > self.tolerance * max(ratios):
                raise LawOfSinesMismatch(tri.id, ratios)

    def _build_edges(self) -> dict[EdgeKey, Edge]:
        lengths: dict[EdgeKey, float] = {}
        owners: dict[EdgeKey, list[int]] = {}
        for tri in self.triangles:
            for key in tri.edge_keys():
                length = tri.side_length(*key)
                if key in lengths:
                    known = lengths[key]
                    if abs(known - length) > self.tolerance * max(known, length):
                        raise SharedEdgeLengthMismatch(key, (known, length))
                else:
                    lengths[key] = length
                owners.setdefault(key, []).append(tri.id)
        return {key: Edge(key, lengths[key], tuple(owners[key])) for key in sorted(lengths)}

    def triangle(self, tid: int) -> Triangle:
        """Triangle by id."""
        if not 0 <= tid < len(self.triangles):
            raise UnknownTriangle(tid)
        return self.triangles[tid]

    def edge(self, u: Union[str, EdgeKey], v: str | None = None) -> Edge:
        """Edge by endpoints or key."""
        key = edge_key(u, v) if v is not None else edge_key(*u)  # type: ignore[arg-type]
        try:
            return self.edges[key]
        except KeyError:
            raise UnknownEdge(key) from None

    def star(self, vertex: str) -> list[int]:
        """Ids of the triangles containing ``vertex``."""
        if vertex not in self._star:
            raise UnknownVertex(vertex)
        return list(self._star[vertex])

    def edges_at(self, vertex: str) -> list[Edge]:
        """Edges with ``vertex`` as an endpoint, sorted by key."""
        if vertex not in self._star:
            raise UnknownVertex(vertex)
        return [e for key, e in self.edges.items() if vertex in key]

    def numeric(self, angle: AngleExpr) -> float:
        """Numeric value of an angle in this complex's atom environment."""
        return angle.numeric(self.atom_env)

    def one_skeleton(self) -> nx.Graph:
        """Vertices and edges, with ``length`` edge attributes, inserted in sorted order."""
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        for key, e in self.edges.items():
            graph.add_edge(*key, length=e.length)
        return graph

    def corner_count(self) -> int:
        """Total number of triangle corners."""
        return 3 * len(self.triangles)

    def subcomplex(self, triangle_ids: Iterable[int]) -> TriangleComplex:
        """The complex spanned by the given triangles; ids are renumbered in order."""
        keep = sorted(set(triangle_ids))
        used = {v for t in keep for v in self.triangles[t].vertices}
        return TriangleComplex(
            [v for v in self.vertices if v in used],
            [(self.triangles[t].vertices, self.triangles[t].angles, self.triangles[t].sides) for t in keep],
            self.atom_env,
            self.tolerance,
        )

    def to_document(self) -> ComplexDocument:
        """The file-format document for this complex."""
        return ComplexDocument(
            atoms=self.atom_env.to_document(),
            vertices=list(self.vertices),
            triangles=[
                {"v": list(t.vertices), "angles": [a.to_document() for a in t.angles], "sides": list(t.sides)}  # type: ignore[misc]
                for t in self.triangles
            ],
        )


def load_complex(document: Union[ComplexDocument, Mapping[str, Any]], tolerance: float = DEFAULT_TOLERANCE) -> TriangleComplex:
    """Build and validate a complex from its document.

    Raises:
        MalformedDocument: The document does not match the format.
        NonSimplicial: Repeated corners or repeated vertex triples.
        UnknownAtom: An angle uses an undeclared atom.
        DegenerateTriangle: A non-positive angle or side.
        AngleSumViolation: Corner angles do not sum to exactly π.
        LawOfSinesMismatch: Sides disagree with angles beyond ``tolerance``.
        SharedEdgeLengthMismatch: Two triangles disagree on an edge length.
    """
    doc = document if isinstance(document, ComplexDocument) else ComplexDocument.from_data(document)
    env = AtomEnv(doc.atoms)
    triangles = [(t.v, [parse_angle(a) for a in t.angles], t.sides) for t in doc.triangles]
    return TriangleComplex(doc.vertices, triangles, env, tolerance)


def dump_complex(complex_: TriangleComplex) -> str:
    """Canonical JSON for a complex."""
    return complex_.to_document().to_json()
