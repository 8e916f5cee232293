"""Spanning-tree presentations of π₁ and homology ranks."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np

from tits.alternative.algebra import Word, cyclic_reduce, free_reduce
from tits.alternative.algebra.words import inverse, rotate_to, substitute
from tits.alternative.complexes import EdgeKey, TriangleComplex, edge_key
from tits.alternative.complexes.topology import euler_characteristic
from tits.alternative.exceptions import Disconnected, UnknownEdge, UnknownVertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """A presentation of π₁(X, basepoint).

    Generator ``i`` (1-based) is the non-tree edge ``generators[i - 1]``
    traversed from its smaller to its larger endpoint, closed up through the
    spanning tree. Relators are the boundaries of the triangles.
    """

    basepoint: str
    tree: tuple[EdgeKey, ...]
    generators: tuple[EdgeKey, ...]
    relators: tuple[Word, ...]
    _generator_index: dict[EdgeKey, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def generator_names(self) -> list[str]:
        return [f"x{i}" for i in range(1, len(self.generators) + 1)]

    def edge_word(self, u: str, v: str) -> Word:
        """Word of the directed edge ``u→v``: empty on tree edges."""
        key = edge_key(u, v)
        index = self._generator_index.get(key)
        if index is None:
            if key not in self.tree:
                raise UnknownEdge(key)
            return ()
        return (index,) if u == key[0] else (-index,)

    def path_word(self, vertices: Sequence[str]) -> Word:
        """Reduced word of an edge path given by its vertex sequence.

        For a closed path based at the basepoint this is its class in π₁;
        for any closed path it is the class up to conjugation.
        """
        letters: list[int] = []
        for u, v in zip(vertices, vertices[1:]):
            letters.extend(self.edge_word(u, v))
        return free_reduce(letters)

    def tietze_reduced(self) -> ReducedPresentation:
        """Eliminate generators that occur exactly once in some relator."""
        generators = list(range(1, len(self.generators) + 1))
        relators = [r for r in (cyclic_reduce(r) for r in self.relators) if r]
        eliminated: dict[int, Word] = {}
        progress = True
        while progress:
            progress = False
            for position, relator in enumerate(relators):
                target = _eliminable(relator)
                if target is None:
                    continue
                index, letter = target
                rest = rotate_to(relator, index)[1:]
                replacement = inverse(rest) if letter > 0 else tuple(rest)
                generator = abs(letter)
                relators.pop(position)
                relators = [r for r in (cyclic_reduce(substitute(r, generator, replacement)) for r in relators) if r]
                eliminated[generator] = replacement
                generators.remove(generator)
                progress = True
                break
        return ReducedPresentation(tuple(generators), tuple(sorted(set(relators))), eliminated)

    def abelianization_rank(self) -> int:
        """Free rank of the abelianization."""
        return self.tietze_reduced().abelianization_rank()

    def to_dict(self) -> dict:
        reduced = self.tietze_reduced()
        return {
            "basepoint": self.basepoint,
            "generators": {name: list(key) for name, key in zip(self.generator_names, self.generators)},
            "relators": [list(r) for r in self.relators],
            "reduced": reduced.to_dict(),
        }


@dataclass(frozen=True)
class ReducedPresentation:
    """Result of Tietze elimination; generators keep their original numbers."""

    generators: tuple[int, ...]
    relators: tuple[Word, ...]
    eliminated: dict[int, Word] = field(default_factory=dict)

    def abelianization_rank(self) -> int:
        """Generators minus the rank of the relator exponent-sum matrix."""
        if not self.relators:
            return len(self.generators)
        column = {g: i for i, g in enumerate(self.generators)}
        matrix = np.zeros((len(self.relators), len(self.generators)))
        for row, relator in enumerate(self.relators):
            for letter in relator:
                matrix[row, column[abs(letter)]] += 1 if letter > 0 else -1
        return len(self.generators) - int(np.linalg.matrix_rank(matrix))

    def to_dict(self) -> dict:
        return {
            "generators": [f"x{g}" for g in self.generators],
            "relators": [list(r) for r in self.relators],
            "abelianization_rank": self.abelianization_rank(),
        }


def _eliminable(relator: Word) -> Optional[tuple[int, int]]:
    counts: dict[int, int] = {}
    for letter in relator:
        counts[abs(letter)] = counts.get(abs(letter), 0) + 1
    for index, letter in enumerate(relator):
        if counts[abs(letter)] == 1:
            return index, letter
    return None


def fundamental_group(complex_: TriangleComplex, basepoint: Optional[str] = None) -> Presentation:
    """Spanning-tree presentation of π₁.

    The tree is a breadth-first tree from ``basepoint`` (default: smallest
    vertex id) with neighbours visited in sorted order.

    Raises:
        Disconnected: The complex has more than one component.
        UnknownVertex: ``basepoint`` is not a vertex.
    """
    graph = complex_.one_skeleton()
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise Disconnected(
            "The fundamental group is computed for connected complexes only",
            fix_suggestion="Split the document into its connected components.",
        )
    base = basepoint if basepoint is not None else min(complex_.vertices)
    if base not in graph:
        raise UnknownVertex(base)

    tree = tuple(sorted(edge_key(u, v) for u, v in nx.bfs_edges(graph, base, sort_neighbors=sorted)))
    in_tree = set(tree)
    generators = tuple(key for key in complex_.edges if key not in in_tree)
    index = {key: i + 1 for i, key in enumerate(generators)}
    presentation = Presentation(base, tree, generators, (), index)

    relators = []
    for tri in complex_.triangles:
        a, b, c = tri.vertices
        relators.append(cyclic_reduce(presentation.path_word([a, b, c, a])))
    presentation = Presentation(base, tree, generators, tuple(relators), index)
    logger.debug(
        "Built presentation",
        extra={"generators": len(generators), "relators": len(relators), "basepoint": base},
    )
    return presentation


def betti_numbers(complex_: TriangleComplex) -> tuple[int, int, int]:
    """(b₀, b₁, b₂) over ℚ from the ranks of the boundary matrices."""
    vertices = {v: i for i, v in enumerate(sorted(complex_.vertices))}
    edges = {key: i for i, key in enumerate(complex_.edges)}
    d1 = np.zeros((len(vertices), len(edges)))
    for key, j in edges.items():
        d1[vertices[key[0]], j] = -1
        d1[vertices[key[1]], j] = 1
    d2 = np.zeros((len(edges), len(complex_.triangles)))
    for tri in complex_.triangles:
        a, b, c = sorted(tri.vertices)
        d2[edges[(a, b)], tri.id] = 1
        d2[edges[(b, c)], tri.id] = 1
        d2[edges[(a, c)], tri.id] = -1
    r1 = int(np.linalg.matrix_rank(d1)) if d1.size else 0
    r2 = int(np.linalg.matrix_rank(d2)) if d2.size else 0
    b0 = len(vertices) - r1
    b2 = len(complex_.triangles) - r2
    b1 = b0 - euler_characteristic(complex_) + b2
    return b0, b1, b2
