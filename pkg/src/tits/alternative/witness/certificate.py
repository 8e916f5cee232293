"""Word-by-word certificate that ``h ↦ f, h' ↦ f'`` is injective up to a length bound."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from tits.alternative.algebra import Word, cyclic_reduce, format_word, reduced_words
from tits.alternative.common import AnalysisMetrics, ordered_map
from tits.alternative.complexes import TriangleComplex
from tits.alternative.exceptions import EndpointsCoincide, ShearedCheckFailed
from tits.alternative.witness.gamma import ENTRY, EXIT, GammaGraph, route
from tits.alternative.witness.sheared import Piece, PerpendicularPiece, ShearedGeodesic, Slide, develop, sheared_violation

logger = logging.getLogger(__name__)

LETTERS = ("h", "h′")

#: Developed endpoints closer than this count as a closed path.
SEPARATION_THRESHOLD = 1e-9


def spell(word: Word) -> str:
    return format_word(word, LETTERS)


@dataclass(frozen=True)
class WordCheck:
    """Outcome for one word."""

    word: Word
    spelled: str
    image: str
    pieces: int
    length: float
    separation: float
    min_separation: float
    failure: Optional[str] = None
    coincide: bool = False

    @property
    def ok(self) -> bool:
        return self.failure is None and not self.coincide

    def to_dict(self) -> dict:
        data = {
            "word": self.spelled,
            "image": self.image,
            "pieces": self.pieces,
            "length": self.length,
            "separation": self.separation,
            "min_separation": self.min_separation,
            "ok": self.ok,
        }
        if self.failure:
            data["failure"] = self.failure
        return data


@dataclass(frozen=True)
class FreeWitness:
    """Γ, the homomorphism and every checked word."""

    gamma: GammaGraph
    max_length: int
    checks: tuple[WordCheck, ...]

    @property
    def complete(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def min_separation(self) -> float:
        return min((c.min_separation for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        names = list(self.gamma.names)
        return {
            "complete": self.complete,
            "max_length": self.max_length,
            "homomorphism": {"h": format_word(self.gamma.f, names), "h′": format_word(self.gamma.f_prime, names)},
            "gamma": self.gamma.to_dict(),
            "words": len(self.checks),
            "min_separation": self.min_separation,
            "checks": [c.to_dict() for c in self.checks],
        }


def path_for_word(complex_: TriangleComplex, gamma: GammaGraph, word: Word) -> ShearedGeodesic:
    """One period of the path through copies of Γ read along ``word``.

    Conjugates give the same shape, so the cyclic reduction is used. The
    period is rotated to start with a connection.

    Raises:
        ValueError: The word is trivial after cyclic reduction.
    """
    letters = cyclic_reduce(word)
    if not letters:
        raise ValueError("The trivial word has no path")
    steps: list[tuple] = []
    for k, letter in enumerate(letters):
        steps.extend(route(ENTRY[letters[k - 1]], EXIT[letter]))
    first_arc = next(i for i, step in enumerate(steps) if step[0] == "arc")
    steps = steps[first_arc:] + steps[:first_arc]

    points = gamma.points
    reversed_pieces: dict[str, PerpendicularPiece] = {}
    pieces: list[Piece] = []
    for step in steps:
        if step[0] == "slide":
            pieces.append(Slide(gamma.edge, points[step[1]], points[step[2]]))
            continue
        piece = gamma.connection(step[1]).piece
        if not step[2]:
            if step[1] not in reversed_pieces:
                reversed_pieces[step[1]] = piece.reversed(complex_)
            piece = reversed_pieces[step[1]]
        pieces.append(piece)
    return ShearedGeodesic(tuple(pieces))


def check_word(complex_: TriangleComplex, gamma: GammaGraph, word: Word, tolerance: float = 1e-9) -> WordCheck:
    """Build, verify and develop the path of one word."""
    geodesic = path_for_word(complex_, gamma, word)
    image = format_word(gamma.image(word), list(gamma.names))
    reason = sheared_violation(complex_, geodesic, cyclic=True, tolerance=tolerance)
    if reason is not None:
        return WordCheck(word, spell(word), image, len(geodesic.pieces), geodesic.length, 0.0, 0.0, failure=reason)
    development = develop(complex_, geodesic)
    if development.diverged is not None:
        reason = f"piece {development.diverged} does not retrace to its recorded end"
    coincide = development.min_separation <= SEPARATION_THRESHOLD
    return WordCheck(
        word,
        spell(word),
        image,
        len(geodesic.pieces),
        geodesic.length,
        development.separation,
        development.min_separation,
        failure=reason,
        coincide=coincide,
    )


def free_subgroup_certificate(
    complex_: TriangleComplex,
    gamma: GammaGraph,
    max_length: int = 4,
    threads: int = 1,
    tolerance: float = 1e-9,
) -> FreeWitness:
    """Check every reduced word in ``h, h'`` of length 1 to ``max_length``.

    Each word's path must be a sheared geodesic whose development does not
    close up. Words are checked in order; the first failure is raised.

    Raises:
        ShearedCheckFailed: A word's path breaks a sheared-geodesic condition.
        EndpointsCoincide: A word's developed path closes up.
    """
    words = list(reduced_words(2, max_length))
    with AnalysisMetrics("free_subgroup_certificate") as metrics:
        checks = ordered_map(lambda w: check_word(complex_, gamma, w, tolerance), words, threads=threads)
        metrics.record("words", len(checks))
    for check in checks:
        if check.failure is not None:
            raise ShearedCheckFailed(check.spelled, check.failure)
        if check.coincide:
            raise EndpointsCoincide(check.spelled, check.min_separation)
    witness = FreeWitness(gamma, max_length, tuple(checks))
    logger.info("Certificate complete", extra={"words": len(checks), "min_separation": witness.min_separation})
    return witness
