"""Exceptions raised by the toolkit.

Exception Hierarchy:
    TitsError(Exception)
    ├── ComplexInputError(TitsError, ValueError)
    │   ├── MalformedDocument
    │   ├── AngleSumViolation
    │   ├── LawOfSinesMismatch
    │   ├── SharedEdgeLengthMismatch
    │   ├── NonSimplicial
    │   ├── DegenerateTriangle
    │   ├── UnknownAtom / UnknownVertex / UnknownEdge / UnknownTriangle
    │   ├── TriangleNotIncident
    │   ├── InvalidDirection
    │   ├── ZeroBudget
    │   ├── OffsetsNotOnOneEdge
    │   ├── Disconnected
    │   ├── NotSimplyConnectedAsserted
    │   └── NotThick
    ├── ConfigurationError(TitsError, ValueError)
    └── AnalysisError(TitsError)
        ├── NotUnfoldable
        ├── PropertyViolation
        ├── BudgetTooSmall
        ├── DiscontinuousPath
        ├── NonOrientablePatch
        ├── EmptyPatch
        ├── NotRational
        ├── NotExtrational
        ├── NoConnectionsWithinBudget
        ├── TrianglePatternMismatch
        ├── ShearedCheckFailed
        └── EndpointsCoincide

Input errors reject a document or a reference into it. Analysis errors mean
the computation ran and the subject failed a precondition or a certificate.
The CLI maps the first family to exit code 2 and the second to exit code 1.
"""

from typing import Any, Optional


class TitsError(Exception):
    """Base exception for all toolkit errors.

    Attributes:
        message: The error message describing what went wrong.
        fix_suggestion: A suggestion for how to fix the error.
        data: Structured context (ids, lengths) for machine-readable reports.
    """

    def __init__(
        self,
        message: str,
        fix_suggestion: Optional[str] = None,
        data: Optional[dict[str, Any]] = None,
    ) -> None:
        self.message = message
        self.fix_suggestion = fix_suggestion
        self.data = data or {}
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        parts = [self.message]
        if self.fix_suggestion:
            parts.append(f"\nHow to fix: {self.fix_suggestion}")
        return "".join(parts)


class ComplexInputError(TitsError, ValueError):
    """An input document, or a reference into a loaded complex, is invalid."""


class ConfigurationError(TitsError, ValueError):
    """Analysis settings could not be loaded or are out of range."""


class AnalysisError(TitsError):
    """The analysis ran and the subject failed a precondition or a check."""


class MalformedDocument(ComplexInputError):
    """The complex document does not match the file format."""


class AngleSumViolation(ComplexInputError):
    """A triangle's corner angles do not sum to exactly π."""

    def __init__(self, triangle: int, total: str) -> None:
        super().__init__(
            f"Triangle {triangle}: corner angles sum to {total}, expected π",
            fix_suggestion="Corner angles are exact; check the rational coefficients and that atom terms cancel.",
            data={"triangle": triangle, "sum": total},
        )


class LawOfSinesMismatch(ComplexInputError):
    """Side lengths are inconsistent with the corner angles."""

    def __init__(self, triangle: int, ratios: list[float]) -> None:
        super().__init__(
            f"Triangle {triangle}: side/sin(angle) ratios {ratios} disagree",
            fix_suggestion="Side i must be opposite corner i.",
            data={"triangle": triangle, "ratios": ratios},
        )


class SharedEdgeLengthMismatch(ComplexInputError):
    """Two triangles give the same edge different lengths."""

    def __init__(self, edge: tuple[str, str], lengths: tuple[float, float]) -> None:
        super().__init__(
            f"Edge {edge[0]}-{edge[1]} has lengths {lengths[0]} and {lengths[1]}",
            data={"edge": list(edge), "lengths": list(lengths)},
        )


class NonSimplicial(ComplexInputError):
    """Repeated vertices in a triangle, or a repeated vertex triple."""


class DegenerateTriangle(ComplexInputError):
    """A corner angle or side length is not positive."""


class UnknownAtom(ComplexInputError):
    """An angle refers to an atom missing from the atom environment."""

    def __init__(self, atom: str) -> None:
        super().__init__(
            f"Unknown atom '{atom}'",
            fix_suggestion=f'Declare it in the document\'s "atoms" map, e.g. "atoms": {{"{atom}": 0.9}}.',
            data={"atom": atom},
        )


class UnknownVertex(ComplexInputError):
    """A vertex id that is not part of the complex."""

    def __init__(self, vertex: str) -> None:
        super().__init__(f"Unknown vertex '{vertex}'", data={"vertex": vertex})


class UnknownEdge(ComplexInputError):
    """A vertex pair that is not an edge of the complex."""

    def __init__(self, edge: Any) -> None:
        super().__init__(f"Unknown edge {edge}", fix_suggestion="Edges are written 'u,v'.", data={"edge": str(edge)})


class UnknownTriangle(ComplexInputError):
    """A triangle id outside the complex."""

    def __init__(self, triangle: int) -> None:
        super().__init__(f"Unknown triangle {triangle}", data={"triangle": triangle})


class TriangleNotIncident(ComplexInputError):
    """The named triangle does not contain the named edge or vertex."""


class InvalidDirection(ComplexInputError):
    """A launch direction outside the open range (0, π), or a bad start point."""


class ZeroBudget(ComplexInputError):
    """A trace was asked to run with a non-positive length budget."""


class OffsetsNotOnOneEdge(ComplexInputError):
    """Connections used to build Γ do not start and end on one quotient edge."""


class Disconnected(ComplexInputError):
    """The complex is not connected."""


class NotSimplyConnectedAsserted(ComplexInputError):
    """geodesic_between needs the caller to assert simple connectivity."""

    def __init__(self) -> None:
        super().__init__(
            "Point-to-point geodesics need a simply connected complex",
            fix_suggestion="Pass assume_simply_connected=True if you know π₁ is trivial.",
        )


class NotThick(ComplexInputError):
    """The edge has degree below 3."""


class NotUnfoldable(AnalysisError):
    """No link at the vertex decomposes as a 2π cycle wedged with a clover."""


class PropertyViolation(AnalysisError):
    """A folding invariant failed to hold."""

    def __init__(self, prop: str, detail: str) -> None:
        self.prop = prop
        super().__init__(f"Folding property '{prop}' violated: {detail}", data={"property": prop})


class BudgetTooSmall(AnalysisError):
    """No path between the points was found within the length budget."""


class DiscontinuousPath(AnalysisError):
    """Consecutive geodesic pieces do not meet."""


class NonOrientablePatch(AnalysisError):
    """The patch admits no consistent triangle orientation."""


class EmptyPatch(AnalysisError):
    """The patch has no triangles."""


class NotRational(AnalysisError):
    """Some link cycle or segment length is not commensurable with π."""


class NotExtrational(AnalysisError):
    """The complex fails a circle-length or holonomy condition."""


class NoConnectionsWithinBudget(AnalysisError):
    """No perpendicular connection back to the edge was found."""


class TrianglePatternMismatch(AnalysisError):
    """Connections do not start and end in the triangle pattern Γ needs."""


class ShearedCheckFailed(AnalysisError):
    """A word's path is not a sheared geodesic."""

    def __init__(self, word: str, reason: str) -> None:
        self.word = word
        super().__init__(f"Word {word}: path is not sheared ({reason})", data={"word": word, "reason": reason})


class EndpointsCoincide(AnalysisError):
    """A word's developed path closes up."""

    def __init__(self, word: str, separation: float) -> None:
        self.word = word
        super().__init__(
            f"Word {word}: developed endpoints coincide (separation {separation:.3e})",
            fix_suggestion="The input is probably not CAT(0) or not simply connected at the scale searched.",
            data={"word": word, "separation": separation},
        )
