"""The metric graph Γ built from three connections at a thick edge.

Γ has two intervals ``I`` and ``I'`` inside the edge and three connection
arcs: ``ab`` leaves ``I`` at ``a`` and comes back at ``b``, ``ca`` leaves
``I`` at ``c`` and lands on ``I'`` at ``a'``, and ``bc`` leaves ``I'`` at
``b'`` and comes back at ``c'``. Copies of Γ are chained along the marked
points ``s, t`` (for ``h``) and ``s', t'`` (for ``h'``).
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
import networkx as nx

from tits.alternative.algebra import Word, format_word, free_reduce, inverse
from tits.alternative.complexes import EdgeKey, TriangleComplex
from tits.alternative.exceptions import OffsetsNotOnOneEdge, TrianglePatternMismatch
from tits.alternative.witness.connections import PerpConnection

logger = logging.getLogger(__name__)

#: Tree paths inside Γ between marked points, as ``("slide", from, to)`` or
#: ``("arc", name, forward)`` steps.
_ROUTES: dict[tuple[str, str], tuple[tuple, ...]] = {
    ("s", "t"): (("slide", "b", "a"), ("arc", "ab", True)),
    ("s", "t'"): (("slide", "b", "c"), ("arc", "ca", True), ("slide", "a'", "b'"), ("arc", "bc", True)),
    ("s", "s'"): (("slide", "b", "c"), ("arc", "ca", True), ("slide", "a'", "c'")),
    ("t", "t'"): (("arc", "ab", False), ("slide", "a", "c"), ("arc", "ca", True), ("slide", "a'", "b'"), ("arc", "bc", True)),
    ("t", "s'"): (("arc", "ab", False), ("slide", "a", "c"), ("arc", "ca", True), ("slide", "a'", "c'")),
    ("s'", "t'"): (("slide", "c'", "b'"), ("arc", "bc", True)),
}

#: Where a copy is left for each letter, and where the next copy is entered.
EXIT = {1: "t", -1: "s", 2: "t'", -2: "s'"}
ENTRY = {1: "s", -1: "t", 2: "s'", -2: "t'"}


def _reverse_step(step: tuple) -> tuple:
    if step[0] == "slide":
        return ("slide", step[2], step[1])
    return ("arc", step[1], not step[2])


def route(source: str, target: str) -> tuple[tuple, ...]:
    """Steps of the tree path in Γ from one marked point to another."""
    if (source, target) in _ROUTES:
        return _ROUTES[(source, target)]
    if (target, source) in _ROUTES:
        return tuple(_reverse_step(s) for s in reversed(_ROUTES[(target, source)]))
    raise KeyError(f"No route from {source} to {target}")


@dataclass(frozen=True)
class GammaGraph:
    """Γ with its embedding data.

    Attributes:
        edge: The thick edge holding ``I`` and ``I'``.
        ab, ca, bc: The three connections.
        triangles: ``(T_a, T_b, T_c)``.
        f, f_prime: Words in π₁ for ``h`` and ``h'``.
        names: Generator names of the presentation, for spelling words.
    """

    edge: EdgeKey
    ab: PerpConnection
    ca: PerpConnection
    bc: PerpConnection
    triangles: tuple[int, int, int]
    f: Word
    f_prime: Word
    names: tuple[str, ...] = field(default=())

    @property
    def points(self) -> dict[str, float]:
        """Offsets on ``edge`` of the six attaching points."""
        return {
            "a": self.ab.start_offset,
            "b": self.ab.end_offset,
            "c": self.ca.start_offset,
            "a'": self.ca.end_offset,
            "b'": self.bc.start_offset,
            "c'": self.bc.end_offset,
        }

    @property
    def interval(self) -> tuple[float, float]:
        p = self.points
        values = (p["a"], p["b"], p["c"])
        return min(values), max(values)

    @property
    def interval_prime(self) -> tuple[float, float]:
        p = self.points
        values = (p["a'"], p["b'"], p["c'"])
        return min(values), max(values)

    @property
    def marked(self) -> dict[str, float]:
        """Offsets of ``s, t, s', t'``."""
        p = self.points
        return {"s": p["b"], "t": p["b"], "s'": p["c'"], "t'": p["c'"]}

    def connection(self, name: str) -> PerpConnection:
        return {"ab": self.ab, "ca": self.ca, "bc": self.bc}[name]

    def image(self, word: Sequence[int]) -> Word:
        """Image of a word in ``h, h'`` under ``h ↦ f``, ``h' ↦ f'``."""
        letters: list[int] = []
        for x in word:
            base = self.f if abs(x) == 1 else self.f_prime
            letters.extend(base if x > 0 else inverse(base))
        return free_reduce(letters)

    def graph(self) -> nx.MultiGraph:
        """Γ as a metric graph with ``length`` attributes."""
        p = self.points
        g = nx.MultiGraph()
        for prefix, names in (("I", ("a", "b", "c")), ("I'", ("a'", "b'", "c'"))):
            ordered = sorted(names, key=lambda n: (p[n], n))
            for u, v in zip(ordered, ordered[1:]):
                g.add_edge(u, v, key=f"{prefix}:{u}-{v}", length=abs(p[v] - p[u]))
        g.add_edge("a", "t", key="ab", length=self.ab.length)
        g.add_edge("c", "a'", key="ca", length=self.ca.length)
        g.add_edge("b'", "t'", key="bc", length=self.bc.length)
        return g

    def to_dict(self) -> dict:
        names = list(self.names)
        return {
            "edge": list(self.edge),
            "triangles": {"a": self.triangles[0], "b": self.triangles[1], "c": self.triangles[2]},
            "points": self.points,
            "intervals": {"I": list(self.interval), "I'": list(self.interval_prime)},
            "lengths": {
                "I": self.interval[1] - self.interval[0],
                "I'": self.interval_prime[1] - self.interval_prime[0],
                "ab": self.ab.length,
                "ca": self.ca.length,
                "bc": self.bc.length,
            },
            "marked": self.marked,
            "f": format_word(self.f, names),
            "f'": format_word(self.f_prime, names),
            "connections": {k: self.connection(k).to_dict(names) for k in ("ab", "ca", "bc")},
        }


def build_gamma(
    complex_: TriangleComplex,
    edge: EdgeKey,
    ab: PerpConnection,
    ca: PerpConnection,
    bc: PerpConnection,
    names: Sequence[str] = (),
) -> GammaGraph:
    """Assemble Γ from three connections.

    ``ab`` must go from ``T_a`` to ``T_b``, ``ca`` from ``T_c`` to ``T_a`` and
    ``bc`` from ``T_b`` to ``T_c``, with the three triangles distinct.
    ``f`` is the word of ``ab``; ``f'`` is the word of ``bc`` conjugated by the
    word of ``ca``.

    Raises:
        OffsetsNotOnOneEdge: A connection is not on ``edge``.
        TrianglePatternMismatch: The triangles do not follow the pattern.
    """
    key = complex_.edge(edge).key
    for name, c in (("ab", ab), ("ca", ca), ("bc", bc)):
        if c.edge != key:
            raise OffsetsNotOnOneEdge(f"Connection {name} lies on {c.edge}, not on {key}", data={"connection": name})
    ta, tb, tc = ab.start_triangle, ab.end_triangle, ca.start_triangle
    if len({ta, tb, tc}) != 3:
        raise TrianglePatternMismatch(
            f"Triangles T_a={ta}, T_b={tb}, T_c={tc} are not distinct",
            data={"triangles": [ta, tb, tc]},
        )
    expected = {"ca end": (ca.end_triangle, ta), "bc start": (bc.start_triangle, tb), "bc end": (bc.end_triangle, tc)}
    for label, (got, want) in expected.items():
        if got != want:
            raise TrianglePatternMismatch(
                f"Connection {label} is in triangle {got}, expected {want}",
                data={"where": label, "got": got, "expected": want},
            )
    g = ca.word
    f_prime = free_reduce((*g, *bc.word, *inverse(g)))
    gamma = GammaGraph(key, ab, ca, bc, (ta, tb, tc), ab.word, f_prime, tuple(names))
    logger.info("Built Γ", extra={"edge": f"{key[0]},{key[1]}", "triangles": [ta, tb, tc]})
    return gamma


def find_gamma(
    complex_: TriangleComplex,
    edge: EdgeKey,
    connections: Sequence[PerpConnection],
    names: Sequence[str] = (),
) -> GammaGraph:
    """Γ for the first ordered triple ``(T_a, T_b, T_c)`` the connections support.

    Raises:
        TrianglePatternMismatch: No triple of distinct triangles works.
    """
    key = complex_.edge(edge).key
    by_ends: dict[tuple[int, int], PerpConnection] = {}
    for c in connections:
        by_ends.setdefault((c.start_triangle, c.end_triangle), c)
    for ta, tb, tc in itertools.permutations(sorted(complex_.edge(key).triangles), 3):
        ab, ca, bc = (by_ends.get(pair) for pair in ((ta, tb), (tc, ta), (tb, tc)))
        if ab and ca and bc:
            return build_gamma(complex_, key, ab, ca, bc, names=names)
    raise TrianglePatternMismatch(
        f"No three triangles at {key[0]},{key[1]} are joined by connections in the required pattern",
        fix_suggestion="Raise the search budget or branch depth to find more connections.",
        data={"edge": list(key), "connections": len(connections)},
    )
