"""Shared fixtures: the fixture complexes and their documents on disk."""

from collections.abc import Callable
from pathlib import Path

import pytest

from tits.alternative.complexes import TriangleComplex, dump_complex
from tits.alternative.testing import (
    FIXTURES,
    alpha_theta,
    book_of_squares,
    equilateral_fan,
    sheared_annulus,
    theta_circle,
    unit_square,
)


@pytest.fixture
def square() -> TriangleComplex:
    return unit_square()


@pytest.fixture
def book() -> TriangleComplex:
    return book_of_squares()


@pytest.fixture(scope="session")
def theta() -> TriangleComplex:
    """Theta graph times a circle; built once, it is immutable."""
    return theta_circle()


@pytest.fixture
def hexagon() -> TriangleComplex:
    return equilateral_fan(6)


@pytest.fixture
def pentagon() -> TriangleComplex:
    return equilateral_fan(5)


@pytest.fixture
def skewed_theta() -> TriangleComplex:
    return alpha_theta()


@pytest.fixture
def annulus() -> TriangleComplex:
    return sheared_annulus()


@pytest.fixture
def complex_file(tmp_path: Path) -> Callable[[str], Path]:
    """Write a named fixture complex to ``tmp_path`` and return its path."""

    def write(name: str) -> Path:
        path = tmp_path / f"{name}.json"
        path.write_text(dump_complex(FIXTURES[name]()), encoding="utf-8")
        return path

    return write
