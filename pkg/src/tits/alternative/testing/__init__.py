"""Fixture complexes for tests and examples."""

from tits.alternative.testing.fixtures import (
    FIXTURES,
    UNFOLDABLE,
    ComplexBuilder,
    alpha_theta,
    book_chain,
    book_of_squares,
    cone_annulus,
    double_fan,
    equilateral_fan,
    fan_with_mixed_clover,
    fan_with_theta_clover,
    sheared_annulus,
    square_double_fan,
    theta_circle,
    triple_fan,
    unit_square,
)

__all__ = [
    "FIXTURES",
    "UNFOLDABLE",
    "ComplexBuilder",
    "alpha_theta",
    "book_chain",
    "book_of_squares",
    "cone_annulus",
    "double_fan",
    "equilateral_fan",
    "fan_with_mixed_clover",
    "fan_with_theta_clover",
    "sheared_annulus",
    "square_double_fan",
    "theta_circle",
    "triple_fan",
    "unit_square",
]
