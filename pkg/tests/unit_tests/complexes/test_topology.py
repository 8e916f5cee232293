"""Tests for degree classification and counting invariants."""

from tits.alternative.complexes import branching_locus, classify, edge_degree, euler_characteristic
from tits.alternative.complexes.topology import boundary_edges, branching_vertices, component_count, shared_edge
from tits.alternative.testing import ComplexBuilder


class TestClassify:
    def test_square_is_neither_essential_nor_thick(self, square):
        shape = classify(square)
        assert (shape.essential, shape.thick, shape.components) == (False, False, 1)

    def test_book_is_thick_but_has_free_edges(self, book):
        shape = classify(book)
        assert shape.thick
        assert not shape.essential

    def test_theta_circle_is_essential_and_thick(self, theta):
        shape = classify(theta)
        assert shape.essential and shape.thick

    def test_components(self):
        builder = ComplexBuilder()
        builder.add_equilateral("a", "b", "c")
        builder.add_equilateral("x", "y", "z")
        assert classify(builder.build()).components == 2


class TestBranchingLocus:
    def test_book_spine(self, book):
        assert [e.key for e in branching_locus(book)] == [("s0", "s1")]
        assert edge_degree(book, "s1", "s0") == 3
        assert branching_vertices(book) == {"s0", "s1"}

    def test_theta_circle_has_two_branching_circles(self, theta):
        keys = [e.key for e in branching_locus(theta)]
        assert keys == [("u0", "u1"), ("u0", "u2"), ("u1", "u2"), ("v0", "v1"), ("v0", "v2"), ("v1", "v2")]
        assert theta.edge("u0", "u1").triangles == (1, 13, 25)

    def test_square_has_no_branching(self, square):
        assert branching_locus(square) == []
        assert len(boundary_edges(square)) == 4


def test_euler_characteristic(square, book, theta, hexagon):
    assert euler_characteristic(square) == 1
    assert euler_characteristic(book) == 1
    assert euler_characteristic(theta) == 0
    assert euler_characteristic(hexagon) == 1


def test_shared_edge(square):
    assert shared_edge(square, 0, 1) == ("v00", "v11")
    assert component_count(square) == 1
