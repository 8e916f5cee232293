"""Perpendicular connections from a thick edge back to itself."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from tits.alternative.algebra import HALF_PI, AngleExpr, Word, format_word
from tits.alternative.checks.presentation import Presentation, fundamental_group
from tits.alternative.common import AnalysisMetrics, ordered_map
from tits.alternative.complexes import EdgeKey, TriangleComplex, edge_key
from tits.alternative.exceptions import NoConnectionsWithinBudget, NotThick
from tits.alternative.geodesics import BranchPolicy, EndKind, GeodesicPath, shoot_perpendicular
from tits.alternative.witness.sheared import PerpendicularPiece

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerpConnection:
    """A trace leaving ``edge`` at a right angle and arriving back on it at a right angle.

    Attributes:
        edge: The thick edge.
        path: The underlying trace.
        word: Class in π₁ of the trace closed up along the edge.
        exact: Whether the arrival angle is exactly π/2.
    """

    edge: EdgeKey
    path: GeodesicPath
    word: Word
    exact: bool

    @property
    def start_offset(self) -> float:
        return self.path.start.location.offset  # type: ignore[union-attr]

    @property
    def start_triangle(self) -> int:
        return self.path.start.triangle

    @property
    def end_offset(self) -> float:
        assert self.path.end.offset is not None
        return self.path.end.offset

    @property
    def end_triangle(self) -> int:
        return self.path.end.triangle

    @property
    def length(self) -> float:
        return self.path.length

    @property
    def piece(self) -> PerpendicularPiece:
        return PerpendicularPiece.from_path(self.path)

    def sort_key(self) -> tuple:
        return (round(self.length, 9), self.start_triangle, self.end_triangle, self.path.triangles, self.start_offset)

    def to_dict(self, names: Optional[list[str]] = None) -> dict:
        return {
            "edge": list(self.edge),
            "start": {"offset": self.start_offset, "triangle": self.start_triangle},
            "end": {"offset": self.end_offset, "triangle": self.end_triangle},
            "length": self.length,
            "triangles": list(self.path.triangles),
            "word": format_word(self.word, names) if names is not None else list(self.word),
            "mode": "exact" if self.exact else "numeric",
        }


def closed_up_word(presentation: Presentation, edge: EdgeKey, path: GeodesicPath) -> Word:
    """π₁ class of a connection followed by a slide back along ``edge``.

    Each crossing is replaced by the smaller endpoint of the crossed edge,
    which turns the trace into a homotopic edge path.
    """
    vertices = [edge[0], *(c.edge[0] for c in path.crossings), edge[0]]
    walk = [vertices[0]]
    for v in vertices[1:]:
        if v != walk[-1]:
            walk.append(v)
    return presentation.path_word(walk)


def _arrives_perpendicular(complex_: TriangleComplex, path: GeodesicPath, key: EdgeKey, tolerance: float) -> Optional[bool]:
    """``True`` for exact arrivals, ``False`` for numeric ones, ``None`` otherwise."""
    if path.end.kind != EndKind.HIT_BRANCHING_EDGE or path.end.edge != key:
        return None
    arrival = path.end.arrival
    if isinstance(arrival, AngleExpr):
        if arrival == HALF_PI:
            return True
        return False if abs(complex_.numeric(arrival) - math.pi / 2) <= tolerance else None
    if arrival is not None and abs(arrival - math.pi / 2) <= tolerance:
        return False
    return None


def find_sheared_connections(
    complex_: TriangleComplex,
    edge: EdgeKey,
    offsets: int = 16,
    budget: float = 8.0,
    max_depth: int = 4,
    threads: int = 1,
    tolerance: float = 1e-9,
    presentation: Optional[Presentation] = None,
) -> list[PerpConnection]:
    """Every perpendicular connection from ``edge`` back to itself within ``budget``.

    Shots start at the offsets ``(2k+1)/(2n)`` of the edge length into every
    incident triangle and go straight through branching edges up to
    ``max_depth`` times. Connections with the same start triangle and
    triangle sequence are reported once, at the first grid offset.

    Raises:
        NotThick: The edge has degree below 3.
        NoConnectionsWithinBudget: No shot came back perpendicularly.
    """
    key = edge_key(*edge)
    found_edge = complex_.edge(key)
    if found_edge.degree < 3:
        raise NotThick(
            f"Edge {found_edge.label} has degree {found_edge.degree}",
            fix_suggestion="Connections are searched at edges of degree at least 3.",
        )
    presentation = presentation or fundamental_group(complex_)
    shots = [
        ((2 * k + 1) / (2 * offsets) * found_edge.length, t)
        for k in range(offsets)
        for t in sorted(found_edge.triangles)
    ]
    policy = BranchPolicy.enumerate(max_depth)

    def shoot(shot: tuple[float, int]) -> list[GeodesicPath]:
        result = shoot_perpendicular(complex_, key, shot[0], shot[1], budget, policy)
        return result if isinstance(result, list) else [result]

    with AnalysisMetrics("find_sheared_connections") as metrics:
        traced = ordered_map(shoot, shots, threads=threads)
        seen: set[tuple[int, tuple[int, ...]]] = set()
        connections = []
        for paths in traced:
            for path in paths:
                exact = _arrives_perpendicular(complex_, path, key, tolerance)
                if exact is None:
                    continue
                dedupe = (path.start.triangle, path.triangles)
                if dedupe in seen:
                    continue
                seen.add(dedupe)
                connections.append(PerpConnection(key, path, closed_up_word(presentation, key, path), exact))
        metrics.record("shots", len(shots))
        metrics.record("connections", len(connections))

    if not connections:
        raise NoConnectionsWithinBudget(
            f"No perpendicular connection back to {found_edge.label} within length {budget}",
            fix_suggestion="Raise --budget or --max-branch-depth.",
            data={"edge": list(key), "budget": budget},
        )
    if not all(c.exact for c in connections):
        logger.warning("Some connections arrive perpendicularly only numerically", extra={"edge": found_edge.label})
    return sorted(connections, key=PerpConnection.sort_key)
