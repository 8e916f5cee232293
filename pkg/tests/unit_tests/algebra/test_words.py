"""Tests for free-group words."""

from collections import Counter

from hypothesis import given
from hypothesis import strategies as st

from tits.alternative.algebra import (
    conjugate,
    cyclic_reduce,
    format_word,
    free_reduce,
    inverse,
    reduced_words,
)
from tits.alternative.algebra.words import rotate_to, substitute

words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12).map(tuple)


def test_free_reduce_cancels_nested_pairs():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce(()) == ()


def test_cyclic_reduce_strips_conjugating_letters():
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((1, 2, -2, -1)) == ()
    assert cyclic_reduce((1, 2, 1)) == (1, 2, 1)


def test_conjugate_and_substitute():
    assert conjugate((2,), (1,)) == (1, 2, -1)
    assert substitute((1, 2, -1), 1, (3,)) == (3, 2, -3)
    assert rotate_to((1, 2, 3), 1) == (2, 3, 1)


def test_reduced_words_on_two_generators():
    counts = Counter(len(w) for w in reduced_words(2, 4))
    assert counts == {1: 4, 2: 12, 3: 36, 4: 108}


def test_reduced_words_order():
    first = list(reduced_words(2, 2))[:6]
    assert first == [(1,), (-1,), (2,), (-2,), (1, 1), (1, 2)]


def test_format_word():
    assert format_word((1, -2), ["h", "h′"]) == "hh′⁻¹"
    assert format_word((), ["h"]) == "1"


@given(words)
def test_a_word_times_its_inverse_is_trivial(word):
    assert free_reduce(word + inverse(word)) == ()


@given(words)
def test_reduction_is_idempotent(word):
    reduced = free_reduce(word)
    assert free_reduce(reduced) == reduced
    assert cyclic_reduce(cyclic_reduce(word)) == cyclic_reduce(word)
    assert all(a != -b for a, b in zip(reduced, reduced[1:]))


def test_enumerated_words_are_reduced():
    for word in reduced_words(2, 4):
        assert free_reduce(word) == word


def test_format_word_past_the_names():
    assert format_word((1, -3), ["h"]) == "hx3⁻¹"
    assert format_word((2,), []) == "x2"
