"""Link condition, π₁ presentations, rationality and holonomy."""

from tits.alternative.checks.cat0 import Cat0Report, VertexFailure, check_local_cat0, vertex_girths
from tits.alternative.checks.presentation import Presentation, ReducedPresentation, betti_numbers, fundamental_group
from tits.alternative.checks.rationality import (
    CircleLink,
    ExtrationalityReport,
    Generator,
    HolonomyValue,
    PatchHolonomy,
    RationalityReport,
    ShearSpectrum,
    check_extrational,
    check_rational,
    circle_link_report,
    psi,
    shear_spectrum,
    triangle_boundary_turning,
)

__all__ = [
    "Cat0Report",
    "CircleLink",
    "ExtrationalityReport",
    "Generator",
    "HolonomyValue",
    "PatchHolonomy",
    "Presentation",
    "RationalityReport",
    "ReducedPresentation",
    "ShearSpectrum",
    "VertexFailure",
    "betti_numbers",
    "check_extrational",
    "check_local_cat0",
    "check_rational",
    "circle_link_report",
    "fundamental_group",
    "psi",
    "shear_spectrum",
    "triangle_boundary_turning",
    "vertex_girths",
]
