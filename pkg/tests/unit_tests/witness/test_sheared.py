"""Random sheared geodesics never close up."""

import numpy as np
import pytest

from tits.alternative.testing import book_chain, theta_circle
from tits.alternative.witness import develop, random_sheared_geodesic, verify_sheared

WALKS = {
    "theta_circle": (theta_circle, ("u0", "u1")),
    "book_chain": (book_chain, ("s1a", "s1b")),
}


@pytest.fixture(scope="module", params=sorted(WALKS))
def walk_start(request):
    build, edge = WALKS[request.param]
    return build(), edge


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_random_walks_are_sheared_and_open(walk_start, seed):
    complex_, edge = walk_start
    walk = random_sheared_geodesic(complex_, edge, steps=6, rng=np.random.default_rng(seed))
    assert len(walk.perpendicular_pieces) == 6
    assert verify_sheared(complex_, walk)
    development = develop(complex_, walk)
    assert development.diverged is None
    assert len(development.separations) == len(walk.pieces)
    assert development.min_separation > 1e-9


def test_walks_are_reproducible(theta):
    first = random_sheared_geodesic(theta, ("u0", "u1"), steps=3, rng=np.random.default_rng(7))
    second = random_sheared_geodesic(theta, ("u0", "u1"), steps=3, rng=np.random.default_rng(7))
    assert first == second


def test_book_chain_walk_moves_one_strip_per_piece():
    chain = book_chain()
    walk = random_sheared_geodesic(chain, ("s1a", "s1b"), steps=4, rng=np.random.default_rng(3))
    development = develop(chain, walk)
    assert [p.length for p in walk.perpendicular_pieces] == pytest.approx([1.0] * 4)
    assert development.separation >= 1.0 - 1e-9
