"""The Lusztig cone of a reduced word, as an exact integer simplicial cone.

The defining matrix has one unit row per simple root and one row per
minimal pair of equal letters (-1 at the pair, +1 at the letters between
that are adjacent in the Dynkin diagram).  Its inverse is computed over
the integers; the columns are the spanning vectors of the cone.

Vectors live in two coordinate systems: *position* coordinates, aligned
with the letters of the word, and *root* coordinates, indexed by the
positive roots (p, q).  Root coordinates are canonical; position
coordinates are a view through the word's root ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .words import ReducedWord, all_positive_roots, root_ordering


@dataclass(frozen=True)
class SimpleRootLabel:
    j: int

    def to_json(self):
        return {"kind": "simple", "j": self.j}


@dataclass(frozen=True)
class ChamberLabel:
    left: int  # 1-based positions of the minimal pair
    right: int

    def to_json(self):
        return {"kind": "chamber", "pair": [self.left, self.right]}


RowLabel = Union[SimpleRootLabel, ChamberLabel]


@dataclass(frozen=True)
class RootVector:
    """Integer vector indexed by the positive roots of A_n."""

    n: int
    values: tuple[int, ...]  # aligned with all_positive_roots(n)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        k = len(all_positive_roots(self.n))
        if len(self.values) != k:
            raise ValueError(f"expected {k} entries, got {len(self.values)}")

    def __getitem__(self, root: tuple[int, int]) -> int:
        return self.values[_root_index(self.n, root)]

    @classmethod
    def from_dict(cls, n: int, entries: dict) -> "RootVector":
        roots = all_positive_roots(n)
        unknown = set(entries) - set(roots)
        if unknown:
            raise ValueError(f"not positive roots of A_{n}: {sorted(unknown)}")
        return cls(n, tuple(entries.get(r, 0) for r in roots))

    @classmethod
    def from_positions(cls, word: ReducedWord, coords) -> "RootVector":
        coords = tuple(coords)
        if len(coords) != word.k:
            raise ValueError(f"expected {word.k} coordinates, got {len(coords)}")
        return cls.from_dict(word.n, dict(zip(root_ordering(word), coords)))

    def to_positions(self, word: ReducedWord) -> tuple[int, ...]:
        if word.n != self.n:
            raise ValueError(f"rank mismatch: {word.n} vs {self.n}")
        return tuple(self[r] for r in root_ordering(word))

    def to_dict(self) -> dict:
        return dict(zip(all_positive_roots(self.n), self.values))

    def to_json(self) -> dict:
        return {f"({p},{q})": v for (p, q), v in self.to_dict().items()}


def _root_index(n: int, root) -> int:
    p, q = root
    if not 1 <= p < q <= n + 1:
        raise KeyError(f"({p},{q}) is not a positive root of A_{n}")
    # roots with first entry < p, then offset within block p
    return (p - 1) * (2 * n + 2 - p) // 2 + (q - p - 1)


@dataclass(frozen=True)
class ConeMatrix:
    """Labeled k x k matrix of defining inequalities, position coordinates."""

    word: ReducedWord
    labels: tuple[RowLabel, ...]
    rows: tuple[tuple[int, ...], ...]

    def row(self, label: RowLabel) -> tuple[int, ...]:
        return self.rows[self.labels.index(label)]


def minimal_pairs(word: ReducedWord) -> list[tuple[int, int]]:
    """Minimal pairs of equal letters, (left, right), by left position."""
    positions_of: dict[int, list[int]] = {}
    for j, i in enumerate(word.letters, start=1):
        positions_of.setdefault(i, []).append(j)
    pairs = []
    for positions in positions_of.values():
        pairs.extend(zip(positions, positions[1:]))
    pairs.sort()
    return pairs


def cone_matrix(word: ReducedWord) -> ConeMatrix:
    """Rows: simple roots 1..n (unit vectors), then chamber rows by left
    position of the minimal pair."""
    n, k = word.n, word.k
    roots = root_ordering(word)
    labels: list[RowLabel] = []
    rows: list[tuple[int, ...]] = []
    for j in range(1, n + 1):
        pos = roots.index((j, j + 1))
        labels.append(SimpleRootLabel(j))
        rows.append(tuple(1 if idx == pos else 0 for idx in range(k)))
    for s, s2 in minimal_pairs(word):
        i = word.letters[s - 1]
        row = [0] * k
        row[s - 1] = row[s2 - 1] = -1
        for p in range(s + 1, s2):
            if abs(word.letters[p - 1] - i) == 1:
                row[p - 1] = 1
        labels.append(ChamberLabel(s, s2))
        rows.append(tuple(row))
    return ConeMatrix(word=word, labels=tuple(labels), rows=tuple(rows))


class UnimodularityError(ArithmeticError):
    """The defining matrix failed to invert to a nonnegative integer matrix
    of determinant +-1 (signals an implementation bug)."""


def exact_inverse(rows) -> tuple[int, list[list[int]]]:
    """Determinant and exact integer inverse of an integer matrix.

    Fraction-free (Bareiss) elimination on the identity-augmented matrix,
    then integer back substitution; every division is checked exact.
    """
    k = len(rows)
    m = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    sign, prev = 1, 1
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            raise UnimodularityError("singular matrix")
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, k):
            mrc = m[r][c]
            for cc in range(c + 1, 2 * k):
                m[r][cc] = (m[r][cc] * m[c][c] - mrc * m[c][cc]) // prev
            m[r][c] = 0
        prev = m[c][c]
    det = sign * m[k - 1][k - 1]
    inv = [[0] * k for _ in range(k)]
    for col in range(k):
        for r in range(k - 1, -1, -1):
            s = m[r][k + col] - sum(m[r][cc] * inv[cc][col] for cc in range(r + 1, k))
            q, rem = divmod(s, m[r][r])
            if rem != 0:
                raise UnimodularityError("inverse is not integral")
            inv[r][col] = q
    return det, inv


@dataclass(frozen=True)
class SpanningSet:
    """Columns of the inverse defining matrix, one spanning vector per row
    label, in position coordinates."""

    matrix: ConeMatrix
    det: int
    columns: tuple[tuple[int, ...], ...]  # columns[l] spans label labels[l]

    def vector(self, label: RowLabel) -> RootVector:
        idx = self.matrix.labels.index(label)
        return RootVector.from_positions(self.matrix.word, self.columns[idx])

    def root_vectors(self) -> dict:
        return {lab: self.vector(lab) for lab in self.matrix.labels}


def invert_unimodular(M: ConeMatrix) -> SpanningSet:
    """Exact inverse of the defining matrix, with the unimodularity and
    nonnegativity guarantees checked, never assumed."""
    k = M.word.k
    det, inv = exact_inverse(M.rows)
    if det not in (1, -1):
        raise UnimodularityError(f"determinant {det} is not +-1")
    if any(x < 0 for row in inv for x in row):
        raise UnimodularityError("inverse has a negative entry")
    for i in range(k):
        for j in range(k):
            acc = sum(M.rows[i][c] * inv[c][j] for c in range(k))
            if acc != int(i == j):
                raise UnimodularityError("inverse check failed")
    columns = tuple(tuple(inv[r][c] for r in range(k)) for c in range(k))
    return SpanningSet(matrix=M, det=det, columns=columns)


def spanning_set(word: ReducedWord) -> SpanningSet:
    return invert_unimodular(cone_matrix(word))


def evaluate_rows(word: ReducedWord, a: RootVector) -> dict:
    """Value of each defining inequality at the point a."""
    M = cone_matrix(word)
    coords = a.to_positions(word)
    return {
        lab: sum(r * x for r, x in zip(row, coords))
        for lab, row in zip(M.labels, M.rows)
    }


def violated_rows(word: ReducedWord, a: RootVector) -> list[RowLabel]:
    """Labels of the defining inequality rows that fail at a."""
    return [lab for lab, v in evaluate_rows(word, a).items() if v < 0]


def contains(word: ReducedWord, a: RootVector) -> bool:
    """Membership in the cone: all k defining rows *and* all k coordinate
    nonnegativity constraints (the latter are redundant, but that is a
    theorem to test, not to assume)."""
    if word.n != a.n:
        raise ValueError(f"rank mismatch: {word.n} vs {a.n}")
    if any(x < 0 for x in a.values):
        return False
    return all(v >= 0 for v in evaluate_rows(word, a).values())


class NotInConeError(ValueError):
    pass


def decompose(word: ReducedWord, a: RootVector) -> dict:
    """Coefficients of a over the spanning vectors: label -> coefficient."""
    if not contains(word, a):
        raise NotInConeError(f"{a.to_positions(word)} is not in the cone")
    coeffs = evaluate_rows(word, a)
    # sanity: recombination is the identity
    span = spanning_set(word)
    k = word.k
    coords = a.to_positions(word)
    recombined = [0] * k
    for idx, lab in enumerate(span.matrix.labels):
        for r in range(k):
            recombined[r] += coeffs[lab] * span.columns[idx][r]
    assert tuple(recombined) == coords
    return coeffs


def superadditivity(word: ReducedWord, a: RootVector) -> bool:
    """Whether a_{ik} >= a_{ij} + a_{jk} for all i < j < k."""
    if word.n != a.n:
        raise ValueError(f"rank mismatch: {word.n} vs {a.n}")
    n = a.n
    return all(
        a[(i, k)] >= a[(i, j)] + a[(j, k)]
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        for k in range(j + 1, n + 2)
    )


def matrix_json(M: ConeMatrix) -> dict:
    return {
        "word": list(M.word.letters),
        "n": M.word.n,
        "rows": [
            {"label": lab.to_json(), "row": list(row)}
            for lab, row in zip(M.labels, M.rows)
        ],
    }
