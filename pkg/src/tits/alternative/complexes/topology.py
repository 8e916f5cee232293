"""Degree classification, branching locus and counting invariants."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from tits.alternative.complexes.model import Edge, EdgeKey, TriangleComplex, edge_key


@dataclass(frozen=True)
class Classification:
    """Degree-based classification of a complex."""

    essential: bool
    thick: bool
    components: int


def edge_degree(complex_: TriangleComplex, u: str, v: str) -> int:
    """Number of triangles containing the edge ``uv``.

    Raises:
        UnknownEdge: ``uv`` is not an edge.
    """
    return complex_.edge(u, v).degree


def component_count(complex_: TriangleComplex) -> int:
    """Connected components of the complex (isolated vertices included)."""
    return nx.number_connected_components(complex_.one_skeleton()) if complex_.vertices else 0


def classify(complex_: TriangleComplex) -> Classification:
    """Essential: every edge has degree at least 2 and no component is a lone vertex.

    Thick: some edge has degree at least 3.
    """
    degrees = [e.degree for e in complex_.edges.values()]
    graph = complex_.one_skeleton()
    lone = any(graph.degree(v) == 0 for v in graph.nodes)
    return Classification(
        essential=bool(degrees) and min(degrees) >= 2 and not lone,
        thick=any(d >= 3 for d in degrees),
        components=component_count(complex_),
    )


def branching_locus(complex_: TriangleComplex) -> list[Edge]:
    """Closed edges of degree at least 3, sorted by key."""
    return [e for e in complex_.edges.values() if e.degree >= 3]


def branching_vertices(complex_: TriangleComplex) -> set[str]:
    """Endpoints of branching edges."""
    return {v for e in branching_locus(complex_) for v in e.key}


def is_branching(complex_: TriangleComplex, key: EdgeKey) -> bool:
    """True iff the edge has degree at least 3."""
    return complex_.edge(key).degree >= 3


def euler_characteristic(complex_: TriangleComplex) -> int:
    """V - E + F."""
    return len(complex_.vertices) - len(complex_.edges) + len(complex_.triangles)


def boundary_edges(complex_: TriangleComplex) -> list[Edge]:
    """Free edges (degree 1)."""
    return [e for e in complex_.edges.values() if e.degree == 1]


def shared_edge(complex_: TriangleComplex, t1: int, t2: int) -> EdgeKey | None:
    """The edge two triangles share, if any."""
    common = set(complex_.triangle(t1).vertices) & set(complex_.triangle(t2).vertices)
    if len(common) != 2:
        return None
    a, b = sorted(common)
    return edge_key(a, b)
