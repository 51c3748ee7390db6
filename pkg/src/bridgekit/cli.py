"""Command line interface.

Exit codes: 0 success (an Inconclusive verdict is a success), 2 invalid
input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import random
import sys
import warnings

from . import __version__
from .criterion import CriterionOutOfScope, check
from .diagram import DiagramError, canonical_form, is_reduced, reduce, validate
from .families import HypothesisWarning, fig8_example, gen_kn, gen_quotient, standard_unlink
from .io import SchemaError, dumps, loads, report_dumps
from .plat import (
    IndexOutOfRange,
    ParseError,
    PlatPresentation,
    apply_word,
    destabilize,
    parse_braid,
    plat_closure,
    stabilize,
)
from .render import render

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3
INPUT_ERRORS = (SchemaError, DiagramError, ParseError, IndexOutOfRange, CriterionOutOfScope,
                OSError)


class InvariantViolation(RuntimeError):
    pass


def _read(path):
    if path == "-":
        return loads(sys.stdin.read())
    with open(path) as fh:
        return loads(fh.read())


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(d, path):
    # everything we hand out must survive a fresh validation
    try:
        validate(d.to_dict())
    except DiagramError as exc:
        raise InvariantViolation(f"produced an invalid diagram: {exc}") from exc
    _write(dumps(d), path)


def _plat(n, word):
    return PlatPresentation(n, parse_braid(word, 2 * n))


def cmd_validate(args):
    d = _read(args.file)
    state = "reduced" if is_reduced(d) else "not reduced"
    print(f"valid: n={d.n}, {d.crossing_count} crossings, {state}")


def cmd_reduce(args):
    d = _read(args.file)
    rng = random.Random(args.seed) if args.seed is not None else None
    out, trace = reduce(d, rng)
    if not is_reduced(out):
        raise InvariantViolation("reduction stopped at a diagram with a bigon")
    print(f"{len(trace.moves)} moves, crossings {trace.initial_crossings} -> "
          f"{trace.final_crossings}", file=sys.stderr)
    _emit(out, args.output)


def cmd_twist(args):
    d = _read(args.file)
    word = parse_braid(args.word, 2 * d.n)
    _emit(apply_word(canonical_form(d), word), args.output)


def cmd_plat(args):
    _emit(plat_closure(_plat(args.n, args.word)), args.output)


def cmd_check(args):
    d = _read(args.file)
    report = check(canonical_form(d))
    if report.certified != all(r.two_connected for r in report.records):
        raise InvariantViolation("verdict disagrees with the per-graph records")
    if len(report.records) != d.n * (d.n - 1):
        raise InvariantViolation("wrong number of graph records")
    if args.json:
        _write(report_dumps(report), None)
        return
    print(report.verdict)
    for r in report.records:
        mark = "2-connected" if r.two_connected else "not 2-connected"
        line = f"  G({r.i},{r.j},{r.hemisphere}): {mark}"
        if r.witness is not None:
            comps = " | ".join(",".join(map(str, c)) for c in r.witness.components)
            line += f"; removing {r.witness.vertex} leaves {comps}"
        print(line)
    print(report.summary())


def cmd_gen(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", HypothesisWarning)
        if args.family == "kn":
            p = gen_kn(args.n)
        elif args.family == "quotient":
            p = gen_quotient(*args.params)
        elif args.family == "fig8":
            p = None
            d = fig8_example()
        else:
            p = None
            d = standard_unlink(args.n)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if p is not None:
        if args.word:
            _write(f"n={p.n} word: {p.word}\n", args.output)
            return
        d = plat_closure(p)
    elif args.word:
        raise SchemaError("--word only applies to plat families", "gen")
    _emit(d, args.output)


def cmd_stabilize(args):
    p = stabilize(_plat(args.n, args.word))
    print(f"n={p.n} word: {p.word}", file=sys.stderr)
    _emit(plat_closure(p), args.output)


def cmd_destabilize(args):
    d = _read(args.file)
    out = destabilize(d)
    if out is None:
        print("no elementary destabilization found")
        return
    _emit(out, args.output)


def cmd_render(args):
    d = _read(args.file)
    fam = None
    if args.family:
        i, j, hemi = args.family
        fam = (int(i), int(j), hemi)
    _write(render(d, fam), args.output)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="bridgekit", description="Bridge diagrams, plat presentations and the 2-connected criterion.",
        epilog="exit codes: 0 success (Inconclusive included), 2 invalid input, 3 internal error")
    ap.add_argument("--version", action="version", version=f"bridgekit {__version__}")
    ap.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a BD-JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("reduce", help="remove bigons (random move order with --seed)")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("twist", help="apply a braid word to a diagram")
    s.add_argument("file")
    s.add_argument("-w", "--word", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("plat", help="bridge diagram of a plat")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-w", "--word", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_plat)

    s = sub.add_parser("check", help="evaluate the 2-connected condition")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="generate a family member")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output")
    common.add_argument("--word", action="store_true", help="print the plat word instead")
    fam = s.add_subparsers(dest="family", required=True)
    f = fam.add_parser("kn", parents=[common])
    f.add_argument("n", type=int)
    f = fam.add_parser("quotient", parents=[common])
    f.add_argument("params", type=int, nargs=6, metavar="P1 P2 P3 P4 Q K")
    fam.add_parser("fig8", parents=[common])
    f = fam.add_parser("unlink", parents=[common])
    f.add_argument("n", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("stabilize", help="stabilize a plat and emit its diagram")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-w", "--word", default="")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_stabilize)

    s = sub.add_parser("destabilize", help="remove one bridge if a simple pattern allows")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_destabilize)

    s = sub.add_parser("render", help="draw a diagram as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--family", nargs=3, metavar=("I", "J", "HEMISPHERE"))
    s.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
