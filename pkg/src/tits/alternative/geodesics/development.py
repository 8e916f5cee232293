"""Planar developments of triangle strips.

A :class:`Frame` places one triangle in the plane: a point with local
coordinates ``p`` lands at ``anchor + R(θ)·diag(1, sign)·p``. Directions are
exact: a local direction ``φ`` becomes ``θ + sign·φ``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from tits.alternative.algebra import PI, TWO_PI, ZERO, AngleExpr
from tits.alternative.complexes import Triangle, TriangleComplex

Angle = Union[AngleExpr, float]


@dataclass(frozen=True)
class Frame:
    """Placement of one triangle in the development plane."""

    triangle: int
    theta: AngleExpr = ZERO
    sign: int = 1
    anchor: tuple[float, float] = (0.0, 0.0)

    def matrix(self, complex_: TriangleComplex) -> np.ndarray:
        """The linear part ``R(θ)·diag(1, sign)``."""
        angle = complex_.numeric(self.theta)
        c, s = math.cos(angle), math.sin(angle)
        return np.array([[c, -s * self.sign], [s, c * self.sign]])

    def place(self, complex_: TriangleComplex, local: np.ndarray) -> np.ndarray:
        """Developed coordinates of a local point."""
        return np.asarray(self.anchor) + self.matrix(complex_) @ np.asarray(local, dtype=float)

    def unplace(self, complex_: TriangleComplex, point: np.ndarray) -> np.ndarray:
        """Local coordinates of a developed point."""
        return self.matrix(complex_).T @ (np.asarray(point, dtype=float) - np.asarray(self.anchor))

    def corner(self, complex_: TriangleComplex, vertex: str) -> np.ndarray:
        """Developed position of a corner."""
        return self.place(complex_, complex_.triangle(self.triangle).local_point(vertex))

    def corners(self, complex_: TriangleComplex) -> np.ndarray:
        """Developed corners, shape ``(3, 2)``, in stored vertex order."""
        tri = complex_.triangle(self.triangle)
        return np.array([self.place(complex_, p) for p in tri.local_points])

    def direction(self, local: Angle, complex_: TriangleComplex) -> Angle:
        """Developed direction of a local direction."""
        if isinstance(local, AngleExpr):
            return self.theta + local * self.sign
        return complex_.numeric(self.theta) + self.sign * local

    def to_local(self, direction: Angle, complex_: TriangleComplex) -> Angle:
        """Local direction of a developed direction."""
        if isinstance(direction, AngleExpr):
            return (direction - self.theta) * self.sign
        return self.sign * (direction - complex_.numeric(self.theta))

    def side_direction(self, complex_: TriangleComplex, a: str, b: str) -> AngleExpr:
        """Exact developed direction of the side ``a→b``."""
        return self.theta + complex_.triangle(self.triangle).local_direction(a, b) * self.sign

    def side_of(self, complex_: TriangleComplex, a: str, b: str) -> int:
        """+1 if the triangle lies left of the developed side ``a→b``, else -1."""
        tri = complex_.triangle(self.triangle)
        return self.sign * tri.orientation(a, b, tri.third(a, b))


def cross_edge(complex_: TriangleComplex, frame: Frame, a: str, b: str, other: int) -> Frame:
    """Frame of ``other`` glued to ``frame`` along the shared side ``ab``.

    ``other`` is placed on the opposite side of the edge.
    """
    here = complex_.triangle(frame.triangle)
    there: Triangle = complex_.triangle(other)
    direction = frame.side_direction(complex_, a, b)
    side = frame.side_of(complex_, a, b)
    sign = -side * there.orientation(a, b, there.third(a, b))
    theta = direction - there.local_direction(a, b) * sign
    glued = Frame(other, theta, sign, (0.0, 0.0))
    start = frame.place(complex_, here.local_point(a))
    offset = glued.matrix(complex_) @ there.local_point(a)
    return Frame(other, theta, sign, (float(start[0] - offset[0]), float(start[1] - offset[1])))


def principal(angle: Angle, complex_: TriangleComplex) -> Angle:
    """Reduce an angle into (−π, π] by whole turns chosen numerically."""
    value = complex_.numeric(angle) if isinstance(angle, AngleExpr) else angle
    turns = math.floor((math.pi - value) / (2 * math.pi))
    if isinstance(angle, AngleExpr):
        return angle + TWO_PI * turns
    return angle + 2 * math.pi * turns


def unit(angle: Angle, complex_: TriangleComplex) -> np.ndarray:
    """Unit vector of a direction."""
    value = complex_.numeric(angle) if isinstance(angle, AngleExpr) else angle
    return np.array([math.cos(value), math.sin(value)])


def numeric(angle: Angle, complex_: TriangleComplex) -> float:
    """Numeric value of an exact or numeric angle."""
    return complex_.numeric(angle) if isinstance(angle, AngleExpr) else float(angle)


def reverse(angle: Angle) -> Angle:
    """The opposite direction."""
    return angle + PI if isinstance(angle, AngleExpr) else angle + math.pi


def cross2(u: np.ndarray, v: np.ndarray) -> float:
    """z-component of the planar cross product."""
    return float(u[0] * v[1] - u[1] * v[0])
