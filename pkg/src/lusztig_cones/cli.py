"""Command-line interface.

Words and points are given as comma-separated integers; points are in
position coordinates (matching the word as typed) and printed in both
coordinate systems.  Output defaults to stdout; ``--out FILE`` writes to
a file.  Exit status: 0 on success, 1 on a domain error (structured JSON
on stderr) or on verification mismatches, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cone, pquiver, spanning, wiring
from .cone import ChamberLabel, RootVector, SimpleRootLabel
from .words import ReducedWord, enumerate_reduced_words, root_ordering


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _word(args) -> ReducedWord:
    return ReducedWord(args.n, _parse_ints(args.word))


def _label_text(label) -> str:
    if isinstance(label, SimpleRootLabel):
        return f"simple({label.j})"
    return f"chamber({label.left},{label.right})"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


def cmd_roots(args) -> int:
    word = _word(args)
    roots = root_ordering(word)
    if args.format == "json":
        _emit_json({**word.to_json(), "roots": [list(r) for r in roots]}, args.out)
    else:
        _emit("".join(f"{j} ({p},{q})\n" for j, (p, q) in enumerate(roots, 1)), args.out)
    return 0


def cmd_chambers(args) -> int:
    word = _word(args)
    diagram = wiring.build_wiring(word)
    if args.format == "json":
        _emit_json(wiring.diagram_json(diagram), args.out)
    else:
        lines = []
        for c in wiring.chambers(diagram):
            label = wiring.format_chamber_set(c.chamber_set, word.n)
            lines.append(f"pair=({c.left_pos},{c.right_pos}) level={c.level} set={label}\n")
        _emit("".join(lines), args.out)
    return 0


def cmd_render(args) -> int:
    word = _word(args)
    fmt = "ascii" if args.format == "text" else args.format
    _emit(wiring.render(wiring.build_wiring(word), fmt), args.out)
    return 0


def cmd_cone_matrix(args) -> int:
    M = cone.cone_matrix(_word(args))
    if args.format == "json":
        _emit_json(cone.matrix_json(M), args.out)
    else:
        lines = [
            f"{_label_text(lab):>14}  {' '.join(f'{x:>2}' for x in row)}\n"
            for lab, row in zip(M.labels, M.rows)
        ]
        _emit("".join(lines), args.out)
    return 0


def cmd_spanning(args) -> int:
    word = _word(args)
    report = spanning.verify_theorem(word)
    if args.format == "json":
        payload = {
            **word.to_json(),
            "overall": report.overall,
            "vectors": [
                {
                    "label": v.label.to_json(),
                    "coords": "root",
                    "root": v.inverse.to_json(),
                    "position": list(v.inverse.to_positions(word)),
                    "matches_formula": v.equal,
                }
                for v in report.verdicts
            ],
        }
        _emit_json(payload, args.out)
    else:
        lines = []
        for v in report.verdicts:
            pos = ",".join(str(x) for x in v.inverse.to_positions(word))
            mark = "ok" if v.equal else "MISMATCH"
            lines.append(f"{_label_text(v.label):>14}  position=({pos})  {mark}\n")
        _emit("".join(lines), args.out)
    return 0 if report.overall else 1


def cmd_verify(args) -> int:
    report = spanning.verify_all(
        args.n, mode=args.mode, count=args.count, seed=args.seed, jobs=args.jobs
    )
    if args.format == "json":
        _emit_json(report.to_json(), args.out)
    else:
        _emit(f"{report.checked} words, {len(report.mismatches)} mismatches\n", args.out)
    return 0 if report.ok else 1


def cmd_member(args) -> int:
    word = _word(args)
    point = RootVector.from_positions(word, _parse_ints(args.point))
    inside = cone.contains(word, point)
    violated = [] if inside else cone.violated_rows(word, point)
    negative = [j + 1 for j, x in enumerate(point.to_positions(word)) if x < 0]
    if args.format == "json":
        payload = {
            **word.to_json(),
            "point": {"coords": "position", "values": list(point.to_positions(word))},
            "root": point.to_json(),
            "member": inside,
            "violated": [lab.to_json() for lab in violated],
            "negative_positions": negative,
        }
        _emit_json(payload, args.out)
    else:
        lines = [f"{'true' if inside else 'false'}\n"]
        for lab in violated:
            lines.append(f"violated: {_label_text(lab)}\n")
        for j in negative:
            lines.append(f"negative coordinate at position {j}\n")
        _emit("".join(lines), args.out)
    return 0


def cmd_decompose(args) -> int:
    word = _word(args)
    point = RootVector.from_positions(word, _parse_ints(args.point))
    coeffs = cone.decompose(word, point)
    if args.format == "json":
        payload = {
            **word.to_json(),
            "point": list(point.to_positions(word)),
            "coefficients": [
                {"label": lab.to_json(), "coefficient": c} for lab, c in coeffs.items()
            ],
        }
        _emit_json(payload, args.out)
    else:
        _emit(
            "".join(f"{_label_text(lab):>14}  {c}\n" for lab, c in coeffs.items()),
            args.out,
        )
    return 0


def cmd_enumerate(args) -> int:
    words = enumerate_reduced_words(args.n)
    if args.format == "json":
        _emit_json({"n": args.n, "words": [list(w.letters) for w in words]}, args.out)
    else:
        _emit("".join(",".join(map(str, w.letters)) + "\n" for w in words), args.out)
    return 0


def cmd_bfz_word(args) -> int:
    n = args.n if args.n is not None else len(args.quiver) + 1
    Q = pquiver.Quiver.from_string(args.quiver, n)
    word = pquiver.bfz_word(Q)
    if args.format == "json":
        _emit_json({"quiver": str(Q), **word.to_json()}, args.out)
    else:
        _emit(",".join(map(str, word.letters)) + "\n", args.out)
    return 0


def cmd_pq(args) -> int:
    if (args.set is None) == (args.pq is None):
        raise ValueError("give exactly one of --set or --pq")
    if args.set is not None:
        members = _parse_ints(args.set)
        P = pquiver.partial_quiver_of(members, args.n)
    else:
        P = pquiver.PartialQuiver.from_string(args.pq, args.n)
    members = sorted(pquiver.chamber_set_of(P))
    comps = pquiver.components(P)
    vec = spanning.v_partial_quiver(P)
    if args.format == "json":
        payload = {
            "n": P.n,
            "pq": str(P),
            "set": members,
            "components": [{"type": c.type, "a": c.a, "b": c.b} for c in comps],
            "vector": vec.to_json(),
        }
        _emit_json(payload, args.out)
    else:
        comp_text = " ".join(f"({c.type},{c.a},{c.b})" for c in comps)
        _emit(
            f"pq={P}\nset={wiring.format_chamber_set(members, P.n)}\n"
            f"components={comp_text}\n",
            args.out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lusztig-cones",
        description="Lusztig cones of type A: diagrams, matrices, spanning vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, word=False, point=False):
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        if word:
            p.add_argument("--word", required=True)
        if point:
            p.add_argument("--point", required=True)
        p.add_argument("--format", choices=["text", "json", "svg"], default="text")
        p.add_argument("--out")
        p.set_defaults(func=func)
        return p

    add("roots", cmd_roots, word=True)
    add("chambers", cmd_chambers, word=True)
    add("render", cmd_render, word=True)
    add("cone-matrix", cmd_cone_matrix, word=True)
    add("spanning", cmd_spanning, word=True)
    p = add("verify", cmd_verify)
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    add("member", cmd_member, word=True, point=True)
    add("decompose", cmd_decompose, word=True, point=True)
    add("enumerate", cmd_enumerate)
    p = sub.add_parser("bfz-word")
    p.add_argument("--quiver", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bfz_word)
    p = sub.add_parser("pq")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set")
    p.add_argument("--pq")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pq)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
