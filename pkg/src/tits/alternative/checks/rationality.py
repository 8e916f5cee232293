"""Rationality, extrationality and patch holonomy.

Holonomy is computed by developing patch triangles into an oriented plane
with exact corner angles. Every triangle of a patch gets a frame
``(θ, s)``: the direction of a side ``a→b`` of triangle ``t`` in the plane is
``θ_t + s_t·L_t(a→b)`` where ``L_t`` is the exact local side direction and
``s_t`` the patch orientation sign. Crossing an interior edge matches the two
expressions for the shared side.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

import networkx as nx

from tits.alternative.algebra import PI, TWO_PI, ZERO, AngleExpr
from tits.alternative.common import ordered_map
from tits.alternative.complexes import EdgeKey, Patch, TriangleComplex, patches
from tits.alternative.complexes.patches import BoundarySide
from tits.alternative.exceptions import EmptyPatch, NonOrientablePatch, NotExtrational, NotRational
from tits.alternative.links import Chain, decompose, link_of_vertex

logger = logging.getLogger(__name__)

Reference = Literal["first", "last"]


@dataclass(frozen=True)
class ChainWitness:
    """A link chain at a vertex."""

    vertex: str
    chain: Chain

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, **self.chain.to_dict()}


@dataclass(frozen=True)
class RationalityReport:
    """Whether every link cycle and segment is a rational multiple of π."""

    passed: bool
    witnesses: tuple[ChainWitness, ...] = ()

    def to_dict(self) -> dict:
        return {"pass": self.passed, "witnesses": [w.to_dict() for w in self.witnesses]}


@dataclass(frozen=True)
class CircleLink:
    """A circle component of a vertex link."""

    vertex: str
    chain: Chain

    @property
    def length(self) -> AngleExpr:
        return self.chain.length

    @property
    def is_full(self) -> bool:
        """True iff the circle has length exactly 2π."""
        return self.chain.length == TWO_PI

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "arcs": list(self.chain.arcs), "length": self.length, "full": self.is_full}


@dataclass(frozen=True)
class HolonomyValue:
    """An angle reduced modulo πℚ: only its atom part survives."""

    value: AngleExpr

    @classmethod
    def of(cls, angle: AngleExpr) -> HolonomyValue:
        return cls(angle.mod_pi_rational())

    @property
    def is_trivial(self) -> bool:
        return not self.value


@dataclass(frozen=True)
class Generator:
    """A generator of H₁(P̄, ∂P) and its holonomy.

    ``holonomy`` keeps the full developed angle; ``value`` is it modulo πℚ.
    """

    kind: Literal["loop", "arc"]
    description: dict
    holonomy: AngleExpr

    @property
    def value(self) -> HolonomyValue:
        return HolonomyValue.of(self.holonomy)

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.description, "psi": self.value.value, "holonomy": self.holonomy}


@dataclass(frozen=True)
class PatchHolonomy:
    """ψ on one patch. ``verdict`` is trivial, nontrivial or undetermined."""

    patch: int
    verdict: str
    generators: tuple[Generator, ...] = ()

    def to_dict(self) -> dict:
        return {"patch": self.patch, "verdict": self.verdict, "generators": [g.to_dict() for g in self.generators]}


@dataclass(frozen=True)
class ExtrationalityReport:
    """Result of :func:`check_extrational`."""

    passed: bool
    circles: tuple[CircleLink, ...]
    patches: tuple[PatchHolonomy, ...]

    @property
    def short_circles(self) -> list[CircleLink]:
        return [c for c in self.circles if not c.is_full]

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "circles": [c.to_dict() for c in self.circles],
            "circle_failures": [c.to_dict() for c in self.short_circles],
            "patches": [p.to_dict() for p in self.patches],
        }


@dataclass(frozen=True)
class ShearSpectrum:
    """ψ′ data for one patch.

    ``values`` are rational multiples of π (as fractions of π) reduced modulo
    ``1/q``; every full holonomy lies in ``(π/q_prime)ℤ``.
    """

    patch: int
    q: int
    q_prime: int
    values: tuple[tuple[dict, Fraction], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "patch": self.patch,
            "q": self.q,
            "q_prime": self.q_prime,
            "values": [{**desc, "psi_prime": _fraction_text(v)} for desc, v in self.values],
        }


def check_rational(complex_: TriangleComplex, threads: int = 1) -> RationalityReport:
    """Every cycle and segment of every vertex link must be commensurable with π.

    Hairs (chains ending at a degree-1 node) are neither and are skipped.
    """
    names = sorted(complex_.vertices)
    parts = ordered_map(lambda v: decompose(link_of_vertex(complex_, v)), names, threads=threads)
    witnesses = []
    for vertex, decomposition in zip(names, parts):
        for chain in decomposition.cycles + decomposition.segments:
            if not chain.length.is_pi_commensurable():
                witnesses.append(ChainWitness(vertex, chain))
    return RationalityReport(passed=not witnesses, witnesses=tuple(witnesses))


def circle_link_report(complex_: TriangleComplex) -> list[CircleLink]:
    """Every circle component of every vertex link with its exact length."""
    report = []
    for vertex in sorted(complex_.vertices):
        for chain in decompose(link_of_vertex(complex_, vertex)).cycles:
            report.append(CircleLink(vertex, chain))
    return report


def _crossed_frame(complex_: TriangleComplex, patch: Patch, t: int, theta: AngleExpr, key: EdgeKey, other: int) -> AngleExpr:
    a, b = key
    signs = patch.orientation or {}
    here, there = complex_.triangle(t), complex_.triangle(other)
    return theta + here.local_direction(a, b) * signs[t] - there.local_direction(a, b) * signs[other]


def _side_direction(complex_: TriangleComplex, patch: Patch, frames: dict[int, AngleExpr], side: BoundarySide) -> AngleExpr:
    t, (a, b) = side
    signs = patch.orientation or {}
    return frames[t] + complex_.triangle(t).local_direction(a, b) * signs[t]


def _tree_frames(complex_: TriangleComplex, patch: Patch) -> tuple[dict[int, AngleExpr], nx.Graph, set[frozenset[int]]]:
    dual = patch.dual_graph(complex_)
    root = patch.triangles[0]
    frames = {root: ZERO}
    tree_edges: set[frozenset[int]] = set()
    for u, v in nx.bfs_edges(dual, root, sort_neighbors=sorted):
        frames[v] = _crossed_frame(complex_, patch, u, frames[u], dual.edges[u, v]["edge"], v)
        tree_edges.add(frozenset((u, v)))
    return frames, dual, tree_edges


def _normalized(kind: Literal["loop", "arc"], description: dict, holonomy: AngleExpr) -> Generator:
    terms = holonomy.atom_terms
    if terms and terms[0][1] < 0:
        return Generator(kind, {**description, "reversed": True}, -holonomy)
    return Generator(kind, {**description, "reversed": False}, holonomy)


def psi(complex_: TriangleComplex, patch: Patch, reference: Reference = "first") -> list[Generator]:
    """Holonomy of a generating set of H₁(P̄, ∂P).

    Loops come from dual edges (interior edges of the patch) outside a
    breadth-first dual spanning tree; arcs join the reference side of the
    first boundary component to the reference side of every other component.
    ``reference`` picks the first or last side of each component in sorted
    order. Each generator is oriented so that the leading atom coefficient of
    its holonomy is non-negative.

    Raises:
        EmptyPatch: The patch has no triangles.
        NonOrientablePatch: The patch has no consistent orientation.
    """
    if not patch.triangles:
        raise EmptyPatch(f"Patch {patch.id} has no triangles")
    if not patch.orientable:
        raise NonOrientablePatch(
            f"Patch {patch.id} is not orientable",
            fix_suggestion="Holonomy is only defined on orientable patches; the verdict for this patch is undetermined.",
            data={"patch": patch.id},
        )

    frames, dual, tree_edges = _tree_frames(complex_, patch)
    generators = []
    for u, v, data in sorted(dual.edges(data=True), key=lambda e: e[2]["edge"]):
        if frozenset((u, v)) in tree_edges:
            continue
        t1, t2 = sorted((u, v))
        through = _crossed_frame(complex_, patch, t1, frames[t1], data["edge"], t2)
        generators.append(
            _normalized("loop", {"edge": list(data["edge"]), "triangles": [t1, t2]}, through - frames[t2])
        )

    components = patch.boundary_components()
    pick = 0 if reference == "first" else -1
    if components:
        anchor = components[0][pick]
        anchor_direction = _side_direction(complex_, patch, frames, anchor)
        for component in components[1:]:
            side = component[pick]
            holonomy = _side_direction(complex_, patch, frames, side) - anchor_direction
            description = {"from": _side_text(anchor), "to": _side_text(side)}
            generators.append(_normalized("arc", description, holonomy))
    logger.debug("Computed patch holonomy", extra={"patch": patch.id, "generators": len(generators)})
    return generators


def dual_loop_holonomy(complex_: TriangleComplex, patch: Patch, triangles: Sequence[int]) -> AngleExpr:
    """Holonomy of a closed walk through adjacent patch triangles.

    ``triangles`` starts and ends at the same triangle; consecutive entries
    must share an interior edge of the patch.

    Raises:
        NonOrientablePatch: The patch has no consistent orientation.
        ValueError: Consecutive triangles are not adjacent inside the patch.
    """
    if not patch.orientable:
        raise NonOrientablePatch(f"Patch {patch.id} is not orientable", data={"patch": patch.id})
    dual = patch.dual_graph(complex_)
    theta = ZERO
    for here, there in zip(triangles, triangles[1:]):
        if not dual.has_edge(here, there):
            raise ValueError(f"Triangles {here} and {there} are not adjacent in patch {patch.id}")
        theta = _crossed_frame(complex_, patch, here, theta, dual.edges[here, there]["edge"], there)
    return theta


def triangle_boundary_turning(complex_: TriangleComplex, tid: int, orientation: int = 1) -> AngleExpr:
    """Sum of the oriented angles between consecutive sides around a triangle.

    At each corner ``x`` with successor ``y`` and predecessor ``z`` this adds
    the oriented angle from ``x→z`` to ``x→y``, reduced into (−π, π]. The
    result is exactly ``-π`` for the stored vertex order and ``π`` for the
    reversed order.
    """
    tri = complex_.triangle(tid)
    order = list(tri.vertices) if orientation >= 0 else list(reversed(tri.vertices))
    total = ZERO
    for i, x in enumerate(order):
        y, z = order[(i + 1) % 3], order[(i - 1) % 3]
        total = total + _principal(tri.local_direction(x, y) - tri.local_direction(x, z), complex_)
    return total


def _principal(angle: AngleExpr, complex_: TriangleComplex) -> AngleExpr:
    turns = math.floor((math.pi - complex_.numeric(angle)) / (2 * math.pi))
    return angle + TWO_PI * turns


def patch_holonomy(complex_: TriangleComplex, patch: Patch, reference: Reference = "first") -> PatchHolonomy:
    """ψ on one patch with a verdict; non-orientable patches are undetermined."""
    try:
        generators = psi(complex_, patch, reference)
    except NonOrientablePatch:
        logger.info("Patch is not orientable", extra={"patch": patch.id})
        return PatchHolonomy(patch.id, "undetermined")
    verdict = "trivial" if all(g.value.is_trivial for g in generators) else "nontrivial"
    return PatchHolonomy(patch.id, verdict, tuple(generators))


def check_extrational(complex_: TriangleComplex, threads: int = 1) -> ExtrationalityReport:
    """Circle links of length 2π and trivial ψ on every orientable patch.

    Raises:
        NotRational: Some link cycle or segment is not commensurable with π.
    """
    rational = check_rational(complex_, threads=threads)
    if not rational.passed:
        first = rational.witnesses[0]
        raise NotRational(
            f"Link at {first.vertex} has a {first.chain.kind} of length {first.chain.length}",
            data={"witnesses": [w.to_dict() for w in rational.witnesses]},
        )
    circles = tuple(circle_link_report(complex_))
    holonomies = tuple(ordered_map(lambda p: patch_holonomy(complex_, p), patches(complex_), threads=threads))
    passed = all(c.is_full for c in circles) and all(h.verdict != "nontrivial" for h in holonomies)
    return ExtrationalityReport(passed=passed, circles=circles, patches=holonomies)


def completion_link_length(complex_: TriangleComplex, patch: Patch, vertex: str) -> AngleExpr:
    """Length of the link of a completion vertex of P̄ (sum of its corners)."""
    total = ZERO
    for (t, v), name in patch.corner_class.items():
        if name == vertex:
            total = total + complex_.triangle(t).angle_at(v)
    return total


def shear_spectrum(complex_: TriangleComplex, patch: Patch) -> ShearSpectrum:
    """ψ′ values and the shear denominators q, q′ of a patch.

    ``q`` is the lcm of the denominators of (link length)/π over boundary
    vertices of P̄ (1 for a patch without boundary). Holonomies keep their
    rational part modulo π/q, and ``q′`` is the lcm of 2, ``q`` and the
    holonomy denominators.

    Raises:
        NotExtrational: The complex is not extrational, or a boundary link of
            the patch is not a rational multiple of π.
    """
    try:
        report = check_extrational(complex_)
    except NotRational as exc:
        raise NotExtrational(f"Complex is not rational: {exc.message}", data=exc.data) from exc
    if not report.passed:
        raise NotExtrational("Complex is not extrational", data=report.to_dict())

    q = 1
    for vertex in patch.boundary_vertices():
        length = completion_link_length(complex_, patch, vertex)
        if not length.is_pi_commensurable():
            raise NotExtrational(f"Boundary link at {vertex} in patch {patch.id} has length {length}")
        q = math.lcm(q, length.pi_coeff.denominator)

    q_prime = math.lcm(2, q)
    values = []
    for generator in psi(complex_, patch):
        coeff = generator.holonomy.pi_coeff
        q_prime = math.lcm(q_prime, coeff.denominator)
        values.append(({"kind": generator.kind, **generator.description}, coeff % Fraction(1, q)))
    return ShearSpectrum(patch.id, q, q_prime, tuple(values))


def _side_text(side: BoundarySide) -> dict:
    t, (a, b) = side
    return {"triangle": t, "edge": [a, b]}


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
