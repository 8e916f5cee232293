"""Builders for the fixture complexes used across the test suite.

Every fixture is a plain function returning a validated
:class:`~tits.alternative.complexes.TriangleComplex`. Vertex ids and triangle
order are fixed, so triangle ids can be relied on in tests.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from fractions import Fraction

from tits.alternative.algebra import HALF_PI, PI, AngleExpr, AtomEnv
from tits.alternative.complexes import TriangleComplex
from tits.alternative.complexes.model import DEFAULT_TOLERANCE

THIRD = AngleExpr.of("1/3")
QUARTER = AngleExpr.of("1/4")

THETA_EDGES = (("u", "x"), ("x", "v"), ("u", "y"), ("y", "v"), ("u", "z"), ("z", "v"))
CIRCLE_EDGES = ((0, 1), (1, 2), (2, 0))


class ComplexBuilder:
    """Accumulates vertices and triangles in insertion order."""

    def __init__(self, atoms: Mapping[str, float] | None = None) -> None:
        self.atoms = AtomEnv(atoms)
        self._vertices: list[str] = []
        self._triangles: list[tuple[tuple[str, str, str], tuple[AngleExpr, ...], tuple[float, ...]]] = []

    def _declare(self, *names: str) -> None:
        for name in names:
            if name not in self._vertices:
                self._vertices.append(name)

    def add_triangle(self, vertices: Sequence[str], angles: Sequence[AngleExpr], sides: Sequence[float]) -> int:
        """Append a triangle and return its id."""
        a, b, c = vertices
        self._declare(a, b, c)
        self._triangles.append(((a, b, c), tuple(angles), tuple(float(s) for s in sides)))
        return len(self._triangles) - 1

    def add_equilateral(self, a: str, b: str, c: str, side: float = 1.0) -> int:
        return self.add_triangle((a, b, c), (THIRD, THIRD, THIRD), (side, side, side))

    def add_isosceles(self, apex: str, a: str, b: str, apex_angle: AngleExpr, leg: float = 1.0) -> int:
        """Legs ``apex-a`` and ``apex-b`` of length ``leg``."""
        base = (PI - apex_angle) * Fraction(1, 2)
        width = 2 * leg * math.sin(apex_angle.numeric(self.atoms) / 2)
        return self.add_triangle((apex, a, b), (apex_angle, base, base), (width, leg, leg))

    def add_square(self, p: str, q: str, r: str, s: str, side: float = 1.0) -> tuple[int, int]:
        """Square with corners in cyclic order, split along the diagonal ``p-r``.

        Produces ``(p, q, r)`` and ``(p, r, s)`` with right angles at ``q`` and ``s``.
        """
        diagonal = side * math.sqrt(2)
        first = self.add_triangle((p, q, r), (QUARTER, HALF_PI, QUARTER), (side, diagonal, side))
        second = self.add_triangle((p, r, s), (QUARTER, QUARTER, HALF_PI), (side, side, diagonal))
        return first, second

    def add_fan(self, center: str, rim: Sequence[str], closed: bool = True) -> list[int]:
        """Equilateral triangles ``(center, rim[i], rim[i+1])``."""
        pairs = list(zip(rim, rim[1:]))
        if closed:
            pairs.append((rim[-1], rim[0]))
        return [self.add_equilateral(center, a, b) for a, b in pairs]

    def add_square_fan(self, center: str, rim: Sequence[str], closed: bool = True) -> list[int]:
        """Right isosceles triangles with the right angle at ``center`` and unit legs."""
        pairs = list(zip(rim, rim[1:]))
        if closed:
            pairs.append((rim[-1], rim[0]))
        return [self.add_isosceles(center, a, b, HALF_PI) for a, b in pairs]

    def build(self, tolerance: float = DEFAULT_TOLERANCE) -> TriangleComplex:
        return TriangleComplex(self._vertices, self._triangles, self.atoms, tolerance)


def unit_square() -> TriangleComplex:
    """One unit square split along ``v00-v11``; isometric to the planar square."""
    builder = ComplexBuilder()
    builder.add_square("v00", "v10", "v11", "v01")
    return builder.build()


def book_of_squares() -> TriangleComplex:
    """Three unit-square pages ``a``, ``b``, ``c`` glued along the spine ``s0-s1``.

    Page ``X`` has far corners ``X0`` (next to ``s0``) and ``X1``; the
    triangles on the spine are 0, 2 and 4.
    """
    builder = ComplexBuilder()
    for page in "abc":
        builder.add_square("s0", "s1", f"{page}1", f"{page}0")
    return builder.build()


def theta_circle() -> TriangleComplex:
    """Theta graph times a circle.

    The theta graph has vertices ``u``, ``v`` joined through ``x``, ``y`` and
    ``z``; the circle has vertices 0, 1, 2. Each product cell is a square of
    side 1/2, so each theta edge gives a flat strip of width 1. The circles
    ``u×S`` and ``v×S`` are the branching locus (degree 3). Square ``k =
    3·(theta edge index) + (circle edge index)`` owns triangles ``2k`` and
    ``2k+1``.
    """
    builder = ComplexBuilder()
    for p, q in THETA_EDGES:
        for i, j in CIRCLE_EDGES:
            builder.add_square(f"{p}{i}", f"{q}{i}", f"{q}{j}", f"{p}{j}", side=0.5)
    return builder.build()


def equilateral_fan(n: int = 6) -> TriangleComplex:
    """``n`` equilateral triangles around ``c`` with rim ``r0 … r{n-1}``.

    The link at ``c`` is a cycle of length ``nπ/3``: flat for 6, a cone point
    failing the link condition for 5.
    """
    builder = ComplexBuilder()
    builder.add_fan("c", [f"r{i}" for i in range(n)])
    return builder.build()


def alpha_theta(alpha: float = 0.1) -> TriangleComplex:
    """Link at ``p`` is a theta graph whose first strand has length ``π + 2α``.

    Strand ``k`` runs ``a → m_k → b`` through two isosceles triangles with unit
    legs at ``p``; the first pair has apex angle ``π/2 + α``.
    """
    builder = ComplexBuilder({"alpha": alpha})
    for k in (1, 2, 3):
        apex = AngleExpr.of("1/2", {"alpha": 1}) if k == 1 else HALF_PI
        builder.add_isosceles("p", "a", f"m{k}", apex)
        builder.add_isosceles("p", f"m{k}", "b", apex)
    return builder.build()


def cone_annulus(n: int = 4, alpha: float = 0.9) -> TriangleComplex:
    """Annulus of ``2n`` triangles around a missing cone point of angle ``2π + α``.

    Sector ``k`` spans ``φ = π/2 + α/n`` radians between inner radius 1
    (``i_k``) and outer radius 2 (``o_k``). The angle ``β`` at ``i_k`` is
    irrational data and enters as its own atom; it cancels from every
    holonomy.
    """
    phi = math.pi / 2 + alpha / n
    beta = math.atan2(2 * math.sin(phi), 2 * math.cos(phi) - 1)
    cross = math.dist((1.0, 0.0), (2 * math.cos(phi), 2 * math.sin(phi)))
    outer = 4 * math.sin(phi / 2)
    inner = 2 * math.sin(phi / 2)

    half_phi = AngleExpr.of("1/4", {"alpha": Fraction(1, 2 * n)})
    b = AngleExpr.atom("beta")
    wide = PI - (PI - half_phi * 2) * Fraction(1, 2)
    builder = ComplexBuilder({"alpha": alpha, "beta": beta})
    for k in range(n):
        i0, o0, o1, i1 = f"i{k}", f"o{k}", f"o{(k + 1) % n}", f"i{(k + 1) % n}"
        builder.add_triangle((i0, o0, o1), (b, PI - wide, wide - b), (outer, cross, 1.0))
        builder.add_triangle((i0, o1, i1), (wide - b, b - half_phi * 2, wide), (1.0, inner, cross))
    return builder.build()


def sheared_annulus(sectors: int = 7) -> TriangleComplex:
    """Annulus of equilateral triangles around a missing cone point of angle ``sectors·π/3``.

    Sector ``k`` is ``(i_k, o_k, m_k)``, ``(i_k, m_k, i_{k+1})`` and
    ``(i_{k+1}, m_k, o_{k+1})``. The inner links have length 4π/3, so the
    patch has ``q = 3``.
    """
    builder = ComplexBuilder()
    for k in range(sectors):
        nxt = (k + 1) % sectors
        builder.add_equilateral(f"i{k}", f"o{k}", f"m{k}")
        builder.add_equilateral(f"i{k}", f"m{k}", f"i{nxt}")
        builder.add_equilateral(f"i{nxt}", f"m{k}", f"o{nxt}")
    return builder.build()


def _hexagon(prefix: str, shared: str) -> list[str]:
    return [shared] + [f"{prefix}{i}" for i in range(1, 6)]


def double_fan() -> TriangleComplex:
    """Two flat hexagonal fans sharing the center ``v`` and the spoke ``v-w``.

    The link at ``v`` is two 2π cycles wedged at ``w``.
    """
    builder = ComplexBuilder()
    builder.add_fan("v", _hexagon("a", "w"))
    builder.add_fan("v", _hexagon("b", "w"))
    return builder.build()


def triple_fan() -> TriangleComplex:
    """Three hexagonal fans sharing ``v`` and ``v-w``; unfolds in two steps."""
    builder = ComplexBuilder()
    for prefix in "abc":
        builder.add_fan("v", _hexagon(prefix, "w"))
    return builder.build()


def fan_with_theta_clover() -> TriangleComplex:
    """A hexagonal fan at ``v`` plus three length-π half fans from ``w`` to ``t``.

    The link at ``v`` is a 2π cycle wedged at ``w`` with a theta graph whose
    strands all end at ``t``.
    """
    builder = ComplexBuilder()
    builder.add_fan("v", _hexagon("a", "w"))
    for k in (1, 2, 3):
        builder.add_fan("v", ["w", f"c{k}", f"d{k}", "t"], closed=False)
    return builder.build()


def square_double_fan() -> TriangleComplex:
    """Two fans of four right triangles sharing ``v`` and ``v-w``."""
    builder = ComplexBuilder()
    for prefix in "ab":
        builder.add_square_fan("v", ["w", f"{prefix}1", f"{prefix}2", f"{prefix}3"])
    return builder.build()


def fan_with_mixed_clover() -> TriangleComplex:
    """Two hexagonal fans and a square fan, all sharing ``v`` and ``v-w``.

    The square fan runs ``w → c1 → t → c2 → w`` with right angles at ``v``.
    """
    builder = ComplexBuilder()
    builder.add_fan("v", _hexagon("a", "w"))
    builder.add_fan("v", _hexagon("b", "w"))
    builder.add_square_fan("v", ["w", "c1", "t", "c2"])
    return builder.build()


def book_chain(n: int = 2) -> TriangleComplex:
    """Spines ``s{k}a-s{k}b`` for ``k = 0 … n`` joined by three pages each.

    A page from spine ``k`` to spine ``k+1`` is a strip of width 1 made of two
    squares of side 1/2 with middle edge ``m{k}{j}a-m{k}{j}b``.
    """
    builder = ComplexBuilder()
    for k in range(n):
        left, right = (f"s{k}a", f"s{k}b"), (f"s{k + 1}a", f"s{k + 1}b")
        for j in range(3):
            mid = (f"m{k}{j}a", f"m{k}{j}b")
            builder.add_square(left[0], left[1], mid[1], mid[0], side=0.5)
            builder.add_square(mid[0], mid[1], right[1], right[0], side=0.5)
    return builder.build()


FIXTURES: dict[str, Callable[[], TriangleComplex]] = {
    "unit_square": unit_square,
    "book_of_squares": book_of_squares,
    "theta_circle": theta_circle,
    "hexagonal_fan": equilateral_fan,
    "pentagonal_fan": lambda: equilateral_fan(5),
    "heptagonal_fan": lambda: equilateral_fan(7),
    "alpha_theta": alpha_theta,
    "cone_annulus": cone_annulus,
    "sheared_annulus": sheared_annulus,
    "double_fan": double_fan,
    "triple_fan": triple_fan,
    "fan_with_theta_clover": fan_with_theta_clover,
    "square_double_fan": square_double_fan,
    "fan_with_mixed_clover": fan_with_mixed_clover,
    "book_chain": book_chain,
}

UNFOLDABLE = ("double_fan", "triple_fan", "fan_with_theta_clover", "square_double_fan", "fan_with_mixed_clover")
