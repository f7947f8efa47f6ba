"""Wiring diagrams of reduced words: crossings, chambers, chamber sets.

``n+1`` strings run left to right, numbered top to bottom by their left
endpoints.  Above the j-th letter ``i_j`` the strings currently at levels
``i_j`` and ``i_j + 1`` (from the top) cross.  Bounded chambers correspond
to minimal pairs of equal letters; each is labelled by its chamber set,
the set of strings passing below it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import ReducedWord, root_ordering


@dataclass(frozen=True)
class Crossing:
    pos: int  # 1-based position in the word
    level: int  # the letter: crossing of levels (level, level+1)
    strings: tuple[int, int]  # the two strings, (p, q) with p < q


@dataclass(frozen=True)
class Chamber:
    """A bounded chamber, i.e. a minimal pair of equal letters."""

    left_pos: int
    right_pos: int
    level: int
    chamber_set: frozenset[int]
    left: Crossing
    right: Crossing
    above: tuple[Crossing, ...]  # crossings at level-1 strictly between
    below: tuple[Crossing, ...]  # crossings at level+1 strictly between


@dataclass(frozen=True)
class WiringDiagram:
    word: ReducedWord
    crossings: tuple[Crossing, ...]
    # profiles[j] = strings top-to-bottom after the first j crossings
    profiles: tuple[tuple[int, ...], ...]


def is_chamber_set(members, n: int) -> bool:
    """A legal chamber set: nonempty, not an initial or final interval."""
    s = set(members)
    if not s or not s <= set(range(1, n + 2)):
        return False
    m = len(s)
    if s == set(range(1, m + 1)):  # [1, j]
        return False
    if s == set(range(n + 2 - m, n + 2)):  # [j, n+1]
        return False
    return True


def build_wiring(word: ReducedWord) -> WiringDiagram:
    """Trace the strings of the word's wiring diagram."""
    n = word.n
    state = list(range(1, n + 2))
    profiles = [tuple(state)]
    crossings = []
    for j, i in enumerate(word.letters, start=1):
        a, b = state[i - 1], state[i]
        crossings.append(Crossing(pos=j, level=i, strings=(min(a, b), max(a, b))))
        state[i - 1], state[i] = b, a
        profiles.append(tuple(state))
    assert profiles[-1] == tuple(range(n + 1, 0, -1))
    # crossing labels are exactly the induced root ordering
    assert tuple(c.strings for c in crossings) == root_ordering(word)
    return WiringDiagram(word=word, crossings=tuple(crossings), profiles=tuple(profiles))


def chambers(diagram: WiringDiagram) -> list[Chamber]:
    """All bounded chambers, ordered by left position."""
    word = diagram.word
    by_pos = {c.pos: c for c in diagram.crossings}
    positions_of = {}
    for j, i in enumerate(word.letters, start=1):
        positions_of.setdefault(i, []).append(j)
    result = []
    for level, positions in positions_of.items():
        for s, s2 in zip(positions, positions[1:]):
            below_strings = frozenset(diagram.profiles[s][level:])
            # the strings below a chamber are constant across its x-range
            for x in range(s, s2):
                assert frozenset(diagram.profiles[x][level:]) == below_strings
            assert is_chamber_set(below_strings, word.n)
            above = tuple(
                by_pos[p]
                for p in range(s + 1, s2)
                if word.letters[p - 1] == level - 1
            )
            below = tuple(
                by_pos[p]
                for p in range(s + 1, s2)
                if word.letters[p - 1] == level + 1
            )
            result.append(
                Chamber(
                    left_pos=s,
                    right_pos=s2,
                    level=level,
                    chamber_set=below_strings,
                    left=by_pos[s],
                    right=by_pos[s2],
                    above=above,
                    below=below,
                )
            )
    result.sort(key=lambda c: c.left_pos)
    assert len(result) == word.n * (word.n - 1) // 2
    return result


def diagram_json(diagram: WiringDiagram) -> dict:
    return {
        "word": list(diagram.word.letters),
        "n": diagram.word.n,
        "crossings": [
            {"pos": c.pos, "strings": list(c.strings)} for c in diagram.crossings
        ],
        "chambers": [
            {"pair": [c.left_pos, c.right_pos], "set": sorted(c.chamber_set)}
            for c in chambers(diagram)
        ],
    }


def format_chamber_set(members, n: int) -> str:
    """Chamber-set label: concatenated digits for n+1 <= 9, else commas."""
    parts = [str(m) for m in sorted(members)]
    return "".join(parts) if n + 1 <= 9 else ",".join(parts)


def render(diagram: WiringDiagram, format: str = "ascii") -> str:
    if format == "ascii":
        return _render_ascii(diagram)
    if format == "svg":
        return _render_svg(diagram)
    raise ValueError(f"unknown render format {format!r}")


def _render_ascii(diagram: WiringDiagram) -> str:
    word = diagram.word
    n, k = word.n, word.k
    margin = len(str(n + 1)) + 1
    width = margin + 4 * k
    grid = []
    for r in range(n + 1):
        label = str(r + 1).rjust(margin - 1) + " "
        grid.append(list(label + "-" * (width - margin)))
    for c in diagram.crossings:
        col = margin + 4 * (c.pos - 1)
        grid[c.level - 1][col] = "\\"
        grid[c.level - 1][col + 1] = "/"
        grid[c.level][col] = "/"
        grid[c.level][col + 1] = "\\"
    for ch in chambers(diagram):
        label = format_chamber_set(ch.chamber_set, n)
        lo = margin + 4 * (ch.left_pos - 1) + 2
        hi = margin + 4 * (ch.right_pos - 1)
        start = max(lo, (lo + hi - len(label)) // 2)
        row = grid[ch.level - 1]
        for idx, chchar in enumerate(label):
            if start + idx < width:
                row[start + idx] = chchar
    letters_row = " " * margin
    for i in word.letters:
        letters_row += str(i).ljust(4)
    lines = ["".join(r) for r in grid] + [letters_row.rstrip()]
    return "\n".join(lines) + "\n"


_SVG_UNIT = 40


def _render_svg(diagram: WiringDiagram) -> str:
    """Deterministic SVG 1.1: unit column per position, unit row per level."""
    word = diagram.word
    n, k, u = word.n, word.k, _SVG_UNIT
    width, height = (k + 2) * u, (n + 2) * u
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    # level of each string after j crossings, from the profiles
    for s in range(1, n + 2):
        points = []
        for j in range(k + 1):
            level = diagram.profiles[j].index(s) + 1
            points.append(f"{(j + 1) * u},{level * u}")
        out.append(
            f'<polyline points="{" ".join(points)}" '
            f'fill="none" stroke="black" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{u // 2}" y="{s * u + 5}" '
            f'font-family="monospace" font-size="16">{s}</text>'
        )
    for j, i in enumerate(word.letters, start=1):
        out.append(
            f'<text x="{j * u + u // 2}" y="{height - u // 2}" '
            f'font-family="monospace" font-size="16" '
            f'text-anchor="middle">{i}</text>'
        )
    for ch in chambers(diagram):
        label = format_chamber_set(ch.chamber_set, n)
        x = (ch.left_pos + ch.right_pos + 2) * u // 2
        y = (2 * ch.level + 1) * u // 2 + 5
        out.append(
            f'<text x="{x}" y="{y}" font-family="monospace" font-size="14" '
            f'text-anchor="middle">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
