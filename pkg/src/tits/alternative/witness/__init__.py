"""Free subgroups from perpendicular connections at a thick edge."""

from tits.alternative.witness.certificate import (
    FreeWitness,
    WordCheck,
    check_word,
    free_subgroup_certificate,
    path_for_word,
)
from tits.alternative.witness.connections import PerpConnection, closed_up_word, find_sheared_connections
from tits.alternative.witness.gamma import GammaGraph, build_gamma, find_gamma, route
from tits.alternative.witness.sheared import (
    Development,
    PerpendicularPiece,
    ShearedGeodesic,
    Slide,
    develop,
    random_sheared_geodesic,
    sheared_violation,
    verify_sheared,
)

__all__ = [
    "Development",
    "FreeWitness",
    "GammaGraph",
    "PerpConnection",
    "PerpendicularPiece",
    "ShearedGeodesic",
    "Slide",
    "WordCheck",
    "build_gamma",
    "check_word",
    "closed_up_word",
    "develop",
    "find_gamma",
    "find_sheared_connections",
    "free_subgroup_certificate",
    "path_for_word",
    "random_sheared_geodesic",
    "route",
    "sheared_violation",
    "verify_sheared",
]
