"""Sheared geodesics: perpendicular pieces joined by slides inside edges.

A sheared geodesic alternates straight pieces that leave and reach edges at a
right angle with slides that stay inside one of those edges. At every
junction the piece before the slide and the piece after it lie in distinct
triangles of the edge, so the concatenation is a local geodesic and its
development never closes up.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from tits.alternative.algebra import HALF_PI, AngleExpr, compare
from tits.alternative.complexes import EdgeKey, TriangleComplex
from tits.alternative.geodesics import BranchPolicy, EndKind, Frame, GeodesicPath, cross_edge, shoot_perpendicular
from tits.alternative.geodesics.development import Angle

logger = logging.getLogger(__name__)

_OFFSET_TOLERANCE = 1e-7


@dataclass(frozen=True)
class PerpendicularPiece:
    """A straight piece from one edge to another, perpendicular at both ends.

    ``choices`` are the triangles entered at branching edges on the way.
    """

    start_edge: EdgeKey
    start_offset: float
    start_triangle: int
    choices: tuple[int, ...]
    length: float
    end_edge: EdgeKey
    end_offset: float
    end_triangle: int
    start_angle: Angle = HALF_PI
    end_angle: Angle = HALF_PI

    @classmethod
    def from_path(cls, path: GeodesicPath) -> PerpendicularPiece:
        """Piece for a trace that starts on an edge and stops on one."""
        assert path.end.edge is not None and path.end.offset is not None and path.end.arrival is not None
        start = path.start.location
        return cls(
            start_edge=start.edge,  # type: ignore[union-attr]
            start_offset=start.offset,  # type: ignore[union-attr]
            start_triangle=path.start.triangle,
            choices=path.branch_choices,
            length=path.length,
            end_edge=path.end.edge,
            end_offset=path.end.offset,
            end_triangle=path.end.triangle,
            start_angle=path.angle,
            end_angle=path.end.arrival,
        )

    def reversed(self, complex_: TriangleComplex) -> PerpendicularPiece:
        """The same piece walked backwards."""
        return PerpendicularPiece(
            start_edge=self.end_edge,
            start_offset=self.end_offset,
            start_triangle=self.end_triangle,
            choices=self._reverse_choices(complex_),
            length=self.length,
            end_edge=self.start_edge,
            end_offset=self.start_offset,
            end_triangle=self.start_triangle,
            start_angle=self.end_angle,
            end_angle=self.start_angle,
        )

    def _reverse_choices(self, complex_: TriangleComplex) -> tuple[int, ...]:
        path = self.trace(complex_)
        return path.reverse_choices

    def trace(self, complex_: TriangleComplex, frame: Optional[Frame] = None) -> GeodesicPath:
        """Trace the piece, optionally placed in an existing development."""
        path = shoot_perpendicular(
            complex_,
            self.start_edge,
            self.start_offset,
            self.start_triangle,
            self.length + 1e-7,
            BranchPolicy.fixed(self.choices),
            frame,
        )
        assert isinstance(path, GeodesicPath)
        return path

    def to_dict(self) -> dict:
        return {
            "kind": "perpendicular",
            "start": {"edge": list(self.start_edge), "offset": self.start_offset, "triangle": self.start_triangle},
            "end": {"edge": list(self.end_edge), "offset": self.end_offset, "triangle": self.end_triangle},
            "choices": list(self.choices),
            "length": self.length,
        }


@dataclass(frozen=True)
class Slide:
    """A move inside an edge between two offsets (possibly equal)."""

    edge: EdgeKey
    start: float
    end: float

    def reversed(self) -> Slide:
        return Slide(self.edge, self.end, self.start)

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    def to_dict(self) -> dict:
        return {"kind": "slide", "edge": list(self.edge), "from": self.start, "to": self.end}


Piece = Union[PerpendicularPiece, Slide]


@dataclass(frozen=True)
class ShearedGeodesic:
    """Alternating perpendicular pieces and slides, starting with a perpendicular piece."""

    pieces: tuple[Piece, ...]

    @property
    def length(self) -> float:
        return sum(p.length for p in self.pieces)

    @property
    def perpendicular_pieces(self) -> list[PerpendicularPiece]:
        return [p for p in self.pieces if isinstance(p, PerpendicularPiece)]

    def to_dict(self) -> dict:
        return {"length": self.length, "pieces": [p.to_dict() for p in self.pieces]}


def _is_right_angle(complex_: TriangleComplex, angle: Angle, tolerance: float) -> bool:
    if isinstance(angle, AngleExpr):
        return compare(angle, HALF_PI, complex_.atom_env, tolerance) == 0
    return abs(angle - math.pi / 2) <= tolerance


def _junction(complex_: TriangleComplex, before: PerpendicularPiece, slide: Slide, after: PerpendicularPiece) -> Optional[str]:
    if not (before.end_edge == slide.edge == after.start_edge):
        return f"slide on {slide.edge} does not join pieces on {before.end_edge} and {after.start_edge}"
    if abs(before.end_offset - slide.start) > _OFFSET_TOLERANCE or abs(slide.end - after.start_offset) > _OFFSET_TOLERANCE:
        return f"slide {slide.start:.9g}→{slide.end:.9g} does not meet the pieces"
    length = complex_.edge(slide.edge).length
    if not (0 < min(slide.start, slide.end) and max(slide.start, slide.end) < length):
        return f"slide leaves the interior of edge {slide.edge[0]},{slide.edge[1]}"
    if before.end_triangle == after.start_triangle:
        return f"both pieces use triangle {after.start_triangle} at edge {slide.edge[0]},{slide.edge[1]}"
    return None


def sheared_violation(
    complex_: TriangleComplex, geodesic: ShearedGeodesic, cyclic: bool = False, tolerance: float = 1e-9
) -> Optional[str]:
    """The first broken condition, or ``None`` when the path is sheared.

    With ``cyclic`` the path is read as one period of a periodic path, so the
    final slide must also join the last piece to the first.
    """
    pieces = geodesic.pieces
    if not pieces or not isinstance(pieces[0], PerpendicularPiece):
        return "path must start with a perpendicular piece"
    for index, piece in enumerate(pieces):
        expected = PerpendicularPiece if index % 2 == 0 else Slide
        if not isinstance(piece, expected):
            return f"piece {index} should be a {expected.__name__}"
    for piece in geodesic.perpendicular_pieces:
        if not _is_right_angle(complex_, piece.start_angle, tolerance):
            return f"piece from triangle {piece.start_triangle} does not start perpendicularly"
        if not _is_right_angle(complex_, piece.end_angle, tolerance):
            return f"piece into triangle {piece.end_triangle} does not end perpendicularly"
        if piece.length <= 0:
            return "empty perpendicular piece"

    triples = [(pieces[i], pieces[i + 1], pieces[i + 2]) for i in range(0, len(pieces) - 2, 2)]
    if cyclic:
        if len(pieces) % 2:
            return "a periodic path must end with a slide"
        triples.append((pieces[-2], pieces[-1], pieces[0]))
    for before, slide, after in triples:
        reason = _junction(complex_, before, slide, after)  # type: ignore[arg-type]
        if reason:
            return reason
    if not cyclic and len(pieces) % 2 == 0:
        slide = pieces[-1]
        assert isinstance(slide, Slide)
        length = complex_.edge(slide.edge).length
        if not (0 < min(slide.start, slide.end) and max(slide.start, slide.end) < length):
            return "final slide leaves the edge interior"
    return None


def verify_sheared(complex_: TriangleComplex, geodesic: ShearedGeodesic, cyclic: bool = False, tolerance: float = 1e-9) -> bool:
    """True iff the path is a sheared geodesic."""
    return sheared_violation(complex_, geodesic, cyclic, tolerance) is None


@dataclass(frozen=True)
class Development:
    """A sheared geodesic laid out in one plane.

    ``separations[k]`` is the distance from the start to the point reached
    after piece ``k``. ``diverged`` names the first piece whose retrace did
    not end where the piece says, if any.
    """

    start: tuple[float, float]
    end: tuple[float, float]
    separations: tuple[float, ...]
    points: tuple[tuple[float, float], ...]
    diverged: Optional[int] = None

    @property
    def separation(self) -> float:
        return self.separations[-1] if self.separations else 0.0

    @property
    def min_separation(self) -> float:
        return min(self.separations) if self.separations else 0.0


def _edge_point(complex_: TriangleComplex, frame: Frame, edge: EdgeKey, offset: float) -> np.ndarray:
    a, b = frame.corner(complex_, edge[0]), frame.corner(complex_, edge[1])
    return a + (b - a) * (offset / complex_.edge(edge).length)


def develop(complex_: TriangleComplex, geodesic: ShearedGeodesic) -> Development:
    """Retrace every piece in one development, crossing straight at the junctions."""
    frame: Optional[Frame] = None
    origin: Optional[np.ndarray] = None
    current: Optional[np.ndarray] = None
    separations: list[float] = []
    points: list[tuple[float, float]] = []
    diverged: Optional[int] = None

    for index, piece in enumerate(geodesic.pieces):
        if isinstance(piece, PerpendicularPiece):
            if frame is None:
                start_frame = Frame(piece.start_triangle)
            else:
                start_frame = cross_edge(complex_, frame, piece.start_edge[0], piece.start_edge[1], piece.start_triangle)
            path = piece.trace(complex_, start_frame)
            if origin is None:
                origin = path.start_point
                points.append((float(origin[0]), float(origin[1])))
            ended_right = (
                path.end.kind == EndKind.HIT_BRANCHING_EDGE
                and path.end.edge == piece.end_edge
                and abs((path.end.offset or 0.0) - piece.end_offset) <= _OFFSET_TOLERANCE
                and path.end.triangle == piece.end_triangle
            )
            if not ended_right and diverged is None:
                diverged = index
            frame = path.end_frame
            current = path.end_point
        else:
            assert frame is not None
            current = _edge_point(complex_, frame, piece.edge, piece.end)
        assert origin is not None and current is not None
        points.append((float(current[0]), float(current[1])))
        separations.append(float(np.linalg.norm(current - origin)))

    start = points[0] if points else (0.0, 0.0)
    end = points[-1] if points else (0.0, 0.0)
    return Development(start, end, tuple(separations), tuple(points), diverged)


def random_sheared_geodesic(
    complex_: TriangleComplex,
    edge: EdgeKey,
    steps: int,
    rng: np.random.Generator,
    budget: float = 8.0,
    tolerance: float = 1e-9,
) -> ShearedGeodesic:
    """Random perpendicular shots joined by random slides.

    Starts from a random interior point of ``edge``. Each shot stops at the
    first branching edge; the walk ends early when a shot arrives anywhere
    else or at a non-right angle.
    """
    key = complex_.edge(edge).key
    offset = float(rng.uniform(0.1, 0.9)) * complex_.edge(key).length
    triangle = int(rng.choice(sorted(complex_.edge(key).triangles)))
    pieces: list[Piece] = []
    previous: Optional[PerpendicularPiece] = None
    for _ in range(steps):
        slide: Optional[Slide] = None
        if previous is not None:
            key = previous.end_edge
            offset = float(rng.uniform(0.1, 0.9)) * complex_.edge(key).length
            triangle = int(rng.choice(sorted(t for t in complex_.edge(key).triangles if t != previous.end_triangle)))
            slide = Slide(key, previous.end_offset, offset)
        path = shoot_perpendicular(complex_, key, offset, triangle, budget)
        assert isinstance(path, GeodesicPath)
        if path.end.kind != EndKind.HIT_BRANCHING_EDGE or not _is_right_angle(complex_, path.end.arrival, tolerance):  # type: ignore[arg-type]
            break
        if slide is not None:
            pieces.append(slide)
        previous = PerpendicularPiece.from_path(path)
        pieces.append(previous)
    logger.debug("Built random sheared geodesic", extra={"pieces": len(pieces)})
    return ShearedGeodesic(tuple(pieces))
