"""Closed-form spanning vectors and the verifier against exact inverses.

Every Lusztig cone has n spanning vectors common to all words, one per
simple root, plus one per bounded chamber; the latter depend only on the
chamber's partial quiver P and equal the rounded-up half of the sum of
the component indicator vectors of P.  ``verify_theorem`` checks this
entrywise, in root coordinates, against the exact inverse of the
defining matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import cone, pquiver, wiring
from .cone import ChamberLabel, RootVector, SimpleRootLabel
from .pquiver import Component, PartialQuiver
from .words import ReducedWord, all_positive_roots, apply_braid_move
from .words import enumerate_reduced_words, long_move_positions
from .words import short_move_positions, staircase_word


def v_simple(j: int, n: int) -> RootVector:
    """Indicator of the roots (p, q) with p <= j < j+1 <= q."""
    if not 1 <= j <= n:
        raise ValueError(f"simple root index {j} out of range [1, {n}]")
    return RootVector.from_dict(
        n,
        {
            (p, q): 1
            for p in range(1, j + 1)
            for q in range(j + 1, n + 2)
        },
    )


def v_component(Y: Component, n: int) -> RootVector:
    """Indicator of the roots (p, q) with p < a(Y) <= b(Y) < q."""
    return RootVector.from_dict(
        n,
        {
            (p, q): 1
            for p in range(1, Y.a)
            for q in range(Y.b + 1, n + 2)
        },
    )


def weight_vector(P: PartialQuiver) -> RootVector:
    """Sum of the component indicator vectors of P."""
    n = P.n
    total = [0] * len(all_positive_roots(n))
    for Y in pquiver.components(P):
        for idx, v in enumerate(v_component(Y, n).values):
            total[idx] += v
    return RootVector(n, tuple(total))


def v_partial_quiver(P: PartialQuiver) -> RootVector:
    """Entrywise ceiling of half the weight vector (1/2 rounds up)."""
    w = weight_vector(P)
    return RootVector(P.n, tuple(-(-x // 2) for x in w.values))


@dataclass(frozen=True)
class LabelVerdict:
    label: object
    formula: RootVector
    inverse: RootVector

    @property
    def equal(self) -> bool:
        return self.formula == self.inverse


@dataclass(frozen=True)
class TheoremReport:
    word: ReducedWord
    verdicts: tuple[LabelVerdict, ...]

    @property
    def overall(self) -> bool:
        return all(v.equal for v in self.verdicts)


def verify_theorem(word: ReducedWord) -> TheoremReport:
    """Compare the closed-form vectors with the exact inverse columns."""
    span = cone.spanning_set(word)
    chamber_by_pair = {
        (c.left_pos, c.right_pos): c
        for c in wiring.chambers(wiring.build_wiring(word))
    }
    verdicts = []
    for label in span.matrix.labels:
        got = span.vector(label)
        if isinstance(label, SimpleRootLabel):
            expected = v_simple(label.j, word.n)
        else:
            chamber = chamber_by_pair[(label.left, label.right)]
            P = pquiver.partial_quiver_of(chamber.chamber_set, word.n)
            expected = v_partial_quiver(P)
        verdicts.append(LabelVerdict(label=label, formula=expected, inverse=got))
    return TheoremReport(word=word, verdicts=tuple(verdicts))


DEFAULT_WALK_FACTOR = 4


def random_words(n: int, count: int, seed: int) -> list[ReducedWord]:
    """Seeded random-walk sample of reduced words.

    Each sample is reached from the previous one by a walk of 4k braid
    moves, each chosen uniformly among the applicable ones.  The sample
    is deterministic given (n, count, seed); no uniformity over words is
    claimed.
    """
    rng = random.Random(seed)
    word = staircase_word(n)
    steps = DEFAULT_WALK_FACTOR * word.k
    out = []
    for _ in range(count):
        for _ in range(steps):
            moves = [(p, "short") for p in short_move_positions(word)]
            moves += [(p, "long") for p in long_move_positions(word)]
            pos, kind = rng.choice(moves)
            word = apply_braid_move(word, pos, kind)
        out.append(word)
    return out


@dataclass
class VerifyReport:
    n: int
    checked: int
    mismatches: list  # (word, label, formula, inverse)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "mismatches": [
                {
                    "word": list(word.letters),
                    "label": label.to_json(),
                    "expected": list(formula.values),
                    "got": list(inverse.values),
                }
                for word, label, formula, inverse in self.mismatches
            ],
        }


def _check_words(args) -> list:
    n, letter_tuples = args
    mismatches = []
    for letters in letter_tuples:
        report = verify_theorem(ReducedWord(n, letters))
        for v in report.verdicts:
            if not v.equal:
                mismatches.append((report.word, v.label, v.formula, v.inverse))
    return mismatches


def verify_all(
    n: int,
    mode: str = "exhaustive",
    count: int = 1000,
    seed: int = 0,
    jobs: int = 1,
) -> VerifyReport:
    """Run verify_theorem over many words and aggregate mismatches."""
    if mode == "exhaustive":
        words = list(enumerate_reduced_words(n))
    elif mode == "sample":
        words = random_words(n, count, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    letter_tuples = [w.letters for w in words]
    if jobs > 1 and len(letter_tuples) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [
            (n, letter_tuples[i::jobs]) for i in range(jobs) if letter_tuples[i::jobs]
        ]
        mismatches = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_check_words, chunks):
                mismatches.extend(part)
    else:
        mismatches = _check_words((n, letter_tuples))
    return VerifyReport(n=n, checked=len(words), mismatches=mismatches)
