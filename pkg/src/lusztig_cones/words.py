"""Reduced expressions for the longest element of the symmetric group.

A word is a tuple of letters in ``[1, n]``; the letter ``i`` stands for the
adjacent transposition ``s_i`` of ``S_{n+1}``.  A word is reduced for the
longest element ``w0`` iff it has length ``n(n+1)/2`` and its product is the
order-reversing permutation of ``[1, n+1]``.  All operations return new
values; nothing is mutated in place.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator


def longest_word_length(n: int) -> int:
    """Length of every reduced expression for w0 in type A_n."""
    return n * (n + 1) // 2


def all_positive_roots(n: int) -> list[tuple[int, int]]:
    """All positive roots (p, q), 1 <= p < q <= n+1, in lexicographic order.

    The pair (p, q) stands for alpha_p + alpha_{p+1} + ... + alpha_{q-1}.
    """
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 2)]


def root_as_simple_coords(root: tuple[int, int], n: int) -> tuple[int, ...]:
    """Expand (p, q) in the basis of simple roots alpha_1..alpha_n."""
    p, q = root
    return tuple(1 if p <= i < q else 0 for i in range(1, n + 1))


def permutation_of(letters: tuple[int, ...], n: int) -> tuple[int, ...]:
    """One-line notation of the product s_{i_1} s_{i_2} ... in S_{n+1}."""
    perm = list(range(1, n + 2))
    for i in letters:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} out of range [1, {n}]")
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def is_reduced_word_for_w0(letters, n: int) -> bool:
    """True iff ``letters`` is a reduced expression for w0 in S_{n+1}."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    letters = tuple(letters)
    if not letters:
        raise ValueError("empty letter sequence")
    perm = permutation_of(letters, n)  # validates letter range
    if len(letters) != longest_word_length(n):
        return False
    return perm == tuple(range(n + 1, 0, -1))


@dataclass(frozen=True)
class ReducedWord:
    """A reduced expression for w0, as an immutable value object."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_reduced_word_for_w0(self.letters, self.n):
            raise ValueError(
                f"{self.letters} is not a reduced word for w0 in A_{self.n}"
            )

    @property
    def k(self) -> int:
        return len(self.letters)

    def to_json(self) -> dict:
        return {"n": self.n, "word": list(self.letters)}


def staircase_word(n: int) -> ReducedWord:
    """The seed word (1, 2,1, 3,2,1, ..., n,...,1)."""
    letters = []
    for m in range(1, n + 1):
        letters.extend(range(m, 0, -1))
    return ReducedWord(n, tuple(letters))


class BraidMoveError(ValueError):
    """The requested braid move does not apply at the given position."""


def apply_braid_move(word: ReducedWord, position: int, kind: str) -> ReducedWord:
    """Apply a braid move at 1-based ``position``.

    ``kind`` is "short" for (i, j) -> (j, i) with |i - j| >= 2, or "long"
    for (i, j, i) -> (j, i, j) with |i - j| = 1.
    """
    letters = list(word.letters)
    p = position - 1
    if kind == "short":
        if not 0 <= p < word.k - 1:
            raise BraidMoveError(f"position {position} out of range")
        a, b = letters[p], letters[p + 1]
        if abs(a - b) < 2:
            raise BraidMoveError(f"letters ({a}, {b}) at {position} do not commute")
        letters[p], letters[p + 1] = b, a
    elif kind == "long":
        if not 0 <= p < word.k - 2:
            raise BraidMoveError(f"position {position} out of range")
        a, b, c = letters[p : p + 3]
        if a != c or abs(a - b) != 1:
            raise BraidMoveError(
                f"letters ({a}, {b}, {c}) at {position} are not (i, j, i) with |i-j|=1"
            )
        letters[p : p + 3] = [b, a, b]
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    return ReducedWord(word.n, tuple(letters))


def short_move_positions(word: ReducedWord) -> list[int]:
    """1-based positions where a short braid move applies."""
    L = word.letters
    return [p + 1 for p in range(word.k - 1) if abs(L[p] - L[p + 1]) >= 2]


def long_move_positions(word: ReducedWord) -> list[int]:
    """1-based positions where a long braid move applies."""
    L = word.letters
    return [
        p + 1
        for p in range(word.k - 2)
        if L[p] == L[p + 2] and abs(L[p] - L[p + 1]) == 1
    ]


def braid_neighbors(word: ReducedWord) -> Iterator[ReducedWord]:
    """All words one braid move (of either kind) away."""
    for p in short_move_positions(word):
        yield apply_braid_move(word, p, "short")
    for p in long_move_positions(word):
        yield apply_braid_move(word, p, "long")


def commutation_class(word: ReducedWord) -> set[ReducedWord]:
    """Closure of ``word`` under short braid moves."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for p in short_move_positions(w):
            nb = apply_braid_move(w, p, "short")
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def enumerate_reduced_words(n: int) -> Iterator[ReducedWord]:
    """Yield every reduced word for w0 exactly once.

    Breadth-first closure of the staircase seed under both braid move
    kinds; the braid-move graph on reduced words of w0 is connected.
    """
    seed = staircase_word(n)
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        yield w
        for nb in braid_neighbors(w):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)


def root_ordering(word: ReducedWord) -> tuple[tuple[int, int], ...]:
    """The ordering of positive roots induced by the word.

    Position j carries s_{i_1}...s_{i_{j-1}}(alpha_{i_j}), written as the
    pair (p, q).  Equivalently (p, q) are the two strings crossing at
    position j in the wiring diagram.
    """
    perm = list(range(1, word.n + 2))
    roots = []
    for i in word.letters:
        p, q = perm[i - 1], perm[i]
        assert p < q, "non-positive root in a reduced word"
        roots.append((p, q))
        perm[i - 1], perm[i] = q, p
    return tuple(roots)
