"""Quivers and partial quivers of type A_n.

Edges of the Dynkin graph are numbered 2..n starting at the *right* end.
A partial quiver directs a nonempty contiguous interval of edges, each L
(leftward) or R (rightward); display strings list edges left to right,
i.e. from edge n down to edge 2, as in ``---LRLL-``.

The map ``chamber_set_of`` is a bijection between partial quivers and
legal chamber sets; ``bfz_word`` builds a reduced word compatible with a
full quiver from the corresponding arrangement of bent lines in a square.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import wiring
from .words import ReducedWord

SYMBOLS = ("L", "R", "-")


@dataclass(frozen=True)
class PartialQuiver:
    """Orientation symbols for edges n..2, left to right."""

    n: int
    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.n < 2:
            raise ValueError(f"partial quivers need n >= 2, got n={self.n}")
        if len(self.symbols) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} edge symbols, got {len(self.symbols)}"
            )
        if any(s not in SYMBOLS for s in self.symbols):
            raise ValueError(f"bad edge symbols in {self.symbols}")
        directed = self.directed_edges()
        if not directed:
            raise ValueError("a partial quiver needs at least one directed edge")
        if directed != list(range(min(directed), max(directed) + 1)):
            raise ValueError("directed edges must form a contiguous interval")

    @classmethod
    def from_string(cls, s: str, n: int | None = None) -> "PartialQuiver":
        if n is None:
            n = len(s) + 1
        return cls(n, tuple(s))

    def __str__(self) -> str:
        return "".join(self.symbols)

    def edge(self, e: int) -> str:
        """Symbol of edge e, 2 <= e <= n."""
        if not 2 <= e <= self.n:
            raise ValueError(f"edge {e} out of range [2, {self.n}]")
        return self.symbols[self.n - e]

    def directed_edges(self) -> list[int]:
        return [e for e in range(2, self.n + 1) if self.symbols[self.n - e] != "-"]

    @property
    def rightmost(self) -> int:
        """Edge index a of the rightmost directed edge (smallest index)."""
        return min(self.directed_edges())

    @property
    def leftmost(self) -> int:
        """Edge index b of the leftmost directed edge (largest index)."""
        return max(self.directed_edges())

    @property
    def is_full(self) -> bool:
        return "-" not in self.symbols


@dataclass(frozen=True)
class Quiver(PartialQuiver):
    """A partial quiver with every edge directed."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_full:
            raise ValueError(f"quiver {''.join(self.symbols)} has undirected edges")

    def left_edges(self) -> set[int]:
        """The set Lambda of edges pointing left."""
        return {e for e in range(2, self.n + 1) if self.edge(e) == "L"}


@dataclass(frozen=True)
class Component:
    """A maximal run of equally oriented edges, spanning edges [a, b]."""

    type: str  # "L" or "R"
    a: int  # rightmost edge index of the run
    b: int  # leftmost edge index of the run


def leq(P: PartialQuiver, P2: PartialQuiver) -> bool:
    """True iff every directed edge of P is directed the same way in P2."""
    if P.n != P2.n:
        raise ValueError(f"rank mismatch: {P.n} vs {P2.n}")
    return all(P2.edge(e) == P.edge(e) for e in P.directed_edges())


def components(P: PartialQuiver) -> list[Component]:
    """Maximal same-orientation runs, left to right."""
    result = []
    run_type, run_edges = None, []
    for e in range(P.leftmost, P.rightmost - 1, -1):  # left to right
        sym = P.edge(e)
        if sym == run_type:
            run_edges.append(e)
        else:
            if run_type is not None:
                result.append(Component(run_type, min(run_edges), max(run_edges)))
            run_type, run_edges = sym, [e]
    result.append(Component(run_type, min(run_edges), max(run_edges)))
    return result


def chamber_set_of(P: PartialQuiver) -> frozenset[int]:
    """The chamber set labelled by P (the bijection, forward direction)."""
    l1 = {e for e in P.directed_edges() if P.edge(e) == "L"}
    a, b = P.rightmost, P.leftmost
    l2 = set(range(1, a)) if P.edge(a) == "R" else set()
    l3 = set(range(b + 1, P.n + 2)) if P.edge(b) == "R" else set()
    s = frozenset(l1 | l2 | l3)
    assert wiring.is_chamber_set(s, P.n)
    return s


def partial_quiver_of(members, n: int) -> PartialQuiver:
    """The partial quiver labelling a chamber set (inverse bijection)."""
    s = set(members)
    if not wiring.is_chamber_set(s, n):
        raise ValueError(f"{sorted(s)} is not a chamber set for n={n}")
    complement = set(range(1, n + 2)) - s
    a = min(complement) if 1 in s else min(s)
    b = max(complement) if n + 1 in s else max(s)
    assert 2 <= a <= b <= n
    symbols = []
    for e in range(n, 1, -1):
        if a <= e <= b:
            symbols.append("L" if e in s else "R")
        else:
            symbols.append("-")
    return PartialQuiver(n, tuple(symbols))


def all_quivers(n: int) -> Iterator[Quiver]:
    """All 2^{n-1} quivers of type A_n."""
    for symbols in itertools.product("LR", repeat=n - 1):
        yield Quiver(n, symbols)


def all_partial_quivers(n: int) -> Iterator[PartialQuiver]:
    """All 2^{n+1} - 2(n+1) partial quivers of type A_n."""
    for a in range(2, n + 1):
        for b in range(a, n + 1):
            for interval in itertools.product("LR", repeat=b - a + 1):
                symbols = ["-"] * (n - 1)
                for idx, e in enumerate(range(b, a - 1, -1)):
                    symbols[n - e] = interval[idx]
                yield PartialQuiver(n, tuple(symbols))


def sub_partial_quivers(Q: Quiver) -> Iterator[PartialQuiver]:
    """All n(n-1)/2 partial quivers P <= Q."""
    for a in range(2, Q.n + 1):
        for b in range(a, Q.n + 1):
            symbols = [
                Q.edge(e) if a <= e <= b else "-" for e in range(Q.n, 1, -1)
            ]
            yield PartialQuiver(Q.n, tuple(symbols))


def quiver_chamber_set(Q: Quiver, i: int, j: int) -> frozenset[int]:
    """Chamber set below the chamber where strings i < j cross above it,
    in the wiring diagram of any word compatible with Q."""
    if not 1 <= i < j <= Q.n + 1:
        raise ValueError(f"need 1 <= i < j <= {Q.n + 1}, got ({i}, {j})")
    x = Q.left_edges()
    y1 = set(range(i + 1, j)) & x
    y2 = set(range(1, i)) if 2 <= i <= Q.n and i not in x else set()
    y3 = set(range(j + 1, Q.n + 2)) if 2 <= j <= Q.n and j not in x else set()
    return frozenset(y1 | y2 | y3)


def chamber_crossings(Q: Quiver, P: PartialQuiver) -> tuple[int, int, int, int]:
    """String numbers (p, q, r, s) bounding the P-labelled chamber.

    In the wiring diagram of any Q-compatible word, strings (p, q) cross
    immediately above the chamber, (q, s) to its left, (p, r) to its right
    and (r, s) below it; two equal strings mean that crossing is absent.

    Searching Q rightward from P's rightmost edge a (and leftward from its
    leftmost edge b) for the nearest edge with the same orientation; a
    virtual edge at position 1 (resp. n+1) with that orientation makes the
    search always succeed.
    """
    if not leq(P, Q):
        raise ValueError(f"{P} is not a sub partial quiver of {Q}")
    n = Q.n
    a, b = P.rightmost, P.leftmost
    sym_a, sym_b = P.edge(a), P.edge(b)
    right = next((e for e in range(a - 1, 1, -1) if Q.edge(e) == sym_a), 1)
    left = next((e for e in range(b + 1, n + 1) if Q.edge(e) == sym_b), n + 1)
    if sym_a == "L":
        s, p = a, right
    else:
        p, s = a, right
    if sym_b == "L":
        r, q = b, left
    else:
        q, r = b, left
    return p, q, r, s


# --- arrangement of bent lines in a square (quiver-compatible words) ---


def _line_segments(h: int, n: int, lam: set[int]):
    """The one or two unit-slope segments of line h in the square."""
    left = (Fraction(1), Fraction(n + 2 - h))
    right = (Fraction(n + 1), Fraction(h))
    if h in lam or h == n + 1:
        vertex = (Fraction(n + 2 - h), Fraction(1))  # down, then up
    else:
        vertex = (Fraction(h), Fraction(n + 1))  # up, then down
    segs = []
    if vertex != left:
        segs.append((left, vertex))
    if vertex != right:
        segs.append((vertex, right))
    return segs


def _segment_crossing(s1, s2):
    """Proper intersection point of two unit-slope segments, or None."""
    (x1, y1), (x2, y2) = s1
    (x3, y3), (x4, y4) = s2
    m1 = (y2 - y1) / (x2 - x1)
    m2 = (y4 - y3) / (x4 - x3)
    if m1 == m2:
        return None
    c1 = y1 - m1 * x1
    c2 = y3 - m2 * x3
    x = (c2 - c1) / (m1 - m2)
    if not (max(x1, x3) <= x <= min(x2, x4)):
        return None
    return (x, m1 * x + c1)


def bfz_word(Q: Quiver) -> ReducedWord:
    """A reduced word compatible with Q, read off the arrangement of its
    left-edge set.

    Lines 1..n+1 join point h on the left edge of a square (numbered top
    to bottom) to point h on the right edge (numbered bottom to top); for
    h in the left-edge set the line bends at the bottom, otherwise at the
    top.  Crossings are read left to right, simultaneous ones bottom-up.
    """
    n = Q.n
    lam = Q.left_edges()
    segments = {h: _line_segments(h, n, lam) for h in range(1, n + 2)}
    events = []  # (x, y, g, h)
    for g in range(1, n + 2):
        for h in range(g + 1, n + 2):
            points = set()
            for s1 in segments[g]:
                for s2 in segments[h]:
                    pt = _segment_crossing(s1, s2)
                    if pt is not None:
                        points.add(pt)
            assert len(points) == 1, f"lines {g}, {h} cross {len(points)} times"
            ((x, y),) = points
            events.append((x, y, g, h))
    events.sort(key=lambda e: (e[0], e[1]))
    order = list(range(1, n + 2))  # top to bottom
    letters = []
    pending = deque(events)
    while pending:
        # within a group of equal x the crossings commute; apply any that
        # is currently adjacent
        for idx, (x, y, g, h) in enumerate(pending):
            ig, ih = order.index(g), order.index(h)
            if abs(ig - ih) == 1:
                break
        else:
            raise AssertionError("no applicable crossing; arrangement inconsistent")
        del pending[idx]
        lo = min(ig, ih)
        letters.append(lo + 1)
        order[lo], order[lo + 1] = order[lo + 1], order[lo]
    assert order == list(range(n + 1, 0, -1))
    word = ReducedWord(n, tuple(letters))
    # compatibility contract: the chamber sets of the word are exactly the
    # chamber sets labelled by the sub partial quivers of Q
    got = {c.chamber_set for c in wiring.chambers(wiring.build_wiring(word))}
    expected = {chamber_set_of(P) for P in sub_partial_quivers(Q)}
    assert got == expected
    return word
