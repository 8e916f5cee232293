"""Words in free groups.

A word is a tuple of non-zero ints: ``i`` is the i-th generator and ``-i`` its
inverse.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs."""
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Iterable[int]) -> Word:
    """Free reduction followed by cancelling inverse first/last letters."""
    reduced = list(free_reduce(word))
    while len(reduced) >= 2 and reduced[0] == -reduced[-1]:
        reduced = reduced[1:-1]
    return tuple(reduced)


def inverse(word: Sequence[int]) -> Word:
    """Formal inverse."""
    return tuple(-letter for letter in reversed(word))


def conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    """``by · word · by⁻¹``, freely reduced."""
    return free_reduce((*by, *word, *inverse(by)))


def rotate_to(word: Sequence[int], index: int) -> Word:
    """Cyclic rotation starting at ``index``."""
    return tuple(word[index:]) + tuple(word[:index])


def substitute(word: Sequence[int], generator: int, replacement: Sequence[int]) -> Word:
    """Replace every occurrence of ``generator`` (and its inverse) and reduce."""
    out: list[int] = []
    for letter in word:
        if letter == generator:
            out.extend(replacement)
        elif letter == -generator:
            out.extend(inverse(replacement))
        else:
            out.append(letter)
    return free_reduce(out)


def reduced_words(rank: int, max_length: int) -> Iterator[Word]:
    """Every reduced word of length 1..``max_length`` on ``rank`` generators.

    Words come ordered by length, then lexicographically on the letter order
    ``1, -1, 2, -2, ...``.
    """
    letters = [s * g for g in range(1, rank + 1) for s in (1, -1)]
    frontier: list[Word] = [()]
    for _ in range(max_length):
        grown = [w + (x,) for w in frontier for x in letters if not w or w[-1] != -x]
        yield from grown
        frontier = grown


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    """Spell a word with generator names, ``⁻¹`` marking inverses; ``1`` if empty.

    Generators past the end of ``names`` are spelled ``x<i>``.
    """
    if not word:
        return "1"

    def name(i: int) -> str:
        return names[i - 1] if i <= len(names) else f"x{i}"

    return "".join(name(abs(x)) + ("" if x > 0 else "⁻¹") for x in word)
