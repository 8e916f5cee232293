"""Connections and Γ at the branching edge u0-u1 of the theta circle, built once per module."""

import pytest

from tits.alternative.checks import fundamental_group
from tits.alternative.witness import find_gamma, find_sheared_connections

EDGE = ("u0", "u1")


@pytest.fixture(scope="module")
def connections(theta):
    return find_sheared_connections(theta, EDGE)


@pytest.fixture(scope="module")
def gamma(theta, connections):
    return find_gamma(theta, EDGE, connections, names=fundamental_group(theta).generator_names)
