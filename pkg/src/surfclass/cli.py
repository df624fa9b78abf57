"""``surf`` command-line front end.

Exit status 0 on success, 1 for bad input, 2 when an internal invariant
fails.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classify, oracle
from .complex import read_tri, require_valid, validate, write_tri
from .curveword import complexity, format_word, normalize, parse_word
from .errors import InvariantViolation, SurfaceError
from .normal import coordinates_of, enumerate_admissible, matching_system, trace
from .polygon import build_polygon, find_interleaved, reduce_word
from .surgery import close_up, cut
from .svg import render_svg


def parse_coords(text):
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise SurfaceError(f"bad coordinate list {text!r}") from None


def _fmt_coords(x):
    return ",".join(str(v) for v in x)


def _load(path):
    try:
        return read_tri(path)
    except OSError as exc:
        raise SurfaceError(f"cannot read {path}: {exc.strerror}") from None


def _valid(path):
    T = _load(path)
    require_valid(T)
    return T


def cmd_validate(args, out):
    report = validate(_load(args.file))
    if report.ok:
        print("valid", file=out)
        return 0
    for v in report.violations:
        print(v, file=out)
    return 1


def cmd_matching(args, out):
    system = matching_system(_valid(args.file))
    print(f"equations {len(system)}", file=out)
    for line in system.lines():
        print(line, file=out)
    return 0


def cmd_enumerate(args, out):
    T = _valid(args.file)
    sols = enumerate_admissible(T, args.max_coord)
    print(f"solutions {len(sols)}", file=out)
    for x in sols:
        print(_fmt_coords(x), file=out)
    return 0


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise SurfaceError(f"--{name.replace('_', '-')} is required")
    return value


def cmd_trace(args, out):
    T = _valid(args.file)
    curves = trace(T, parse_coords(_need(args, "coords")))
    print(f"components {len(curves)}", file=out)
    for k, comp in enumerate(curves.components):
        print(f"component {k}: word {format_word(comp.word)} coords {_fmt_coords(comp.coords)}", file=out)
    return 0


def cmd_normalize(args, out):
    T = _valid(args.file)
    w = parse_word(_need(args, "curve"))
    print(f"complexity {complexity(T, w)}", file=out)
    result, steps = normalize(T, w)
    for step in steps:
        print(f"step {step.kind} component {step.component} position {step.position} "
              f"complexity {step.complexity}", file=out)
    print(f"normal {format_word(result)}", file=out)
    print(f"coords {_fmt_coords(coordinates_of(T, result))}", file=out)
    return 0


def cmd_cut(args, out):
    T = _valid(args.file)
    C = cut(T, parse_coords(_need(args, "coords")))
    parts = C.components()
    print(f"components {len(parts)}", file=out)
    for k, part in enumerate(parts):
        print(f"component {k}: boundary circles {len(part.boundary)}", file=out)
    if args.cap:
        prefix = args.output or str(Path(args.file).with_suffix(""))
        for k, S in enumerate(close_up(C)):
            path = f"{prefix}.part{k}.tri"
            write_tri(S, path)
            print(f"wrote {path}", file=out)
    return 0


def cmd_classify(args, out):
    result = classify.genus(_valid(args.file), seed=args.seed)
    print(f"genus {result.genus}", file=out)
    if args.certify:
        for k, rec in enumerate(result.records):
            print(f"round {k}: word {rec.reduced_word} letter {rec.letter} "
                  f"triangles {rec.surface.n} curve {_fmt_coords(rec.coords)}", file=out)
        print(f"final: word {result.final_word or '(empty)'} triangles {result.final_surface.n}", file=out)
    return 0


def cmd_decompose(args, out):
    print(classify.format_decomposition(classify.decompose(_valid(args.file))), file=out)
    return 0


def cmd_polygon(args, out):
    P = build_polygon(_valid(args.file))
    print(P.word, file=out)
    reduced, count = reduce_word(P.word)
    print(f"reduced {reduced or '(empty)'} cancellations {count}", file=out)
    if args.svg:
        pair = find_interleaved(reduced)
        arcs = () if pair is None else pair
        # chords are drawn in the unreduced polygon; letters keep their names
        Path(args.svg).write_text(render_svg(P, arcs), encoding="utf-8")
        print(f"wrote {args.svg}", file=out)
    return 0


def cmd_oracle(args, out):
    print(oracle.euler(_valid(args.file)), file=out)
    return 0


def cmd_gen(args, out):
    if args.genus is None or args.output is None:
        raise SurfaceError("gen needs --genus and -o")
    T = oracle.genus_g(args.genus)
    if args.refine:
        T = oracle.refine(T, args.refine, args.seed or 0)
    write_tri(T, args.output)
    print(f"wrote {args.output} ({T.n} triangles)", file=out)
    return 0


def cmd_verify(args, out):
    T = _valid(args.file)
    g = classify.genus(T, seed=args.seed).genus
    expected = oracle.euler(T).genus
    print(f"classify {g}", file=out)
    print(f"oracle {expected}", file=out)
    if g != expected:
        raise InvariantViolation("classification disagrees with the Euler characteristic")
    print("agree", file=out)
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "matching": cmd_matching,
    "enumerate": cmd_enumerate,
    "trace": cmd_trace,
    "normalize": cmd_normalize,
    "cut": cmd_cut,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "polygon": cmd_polygon,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="surf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "gen":
            p.add_argument("file")
        if name in ("trace", "cut"):
            p.add_argument("--coords")
        if name == "normalize":
            p.add_argument("--curve")
        if name == "enumerate":
            p.add_argument("--max-coord", type=int, default=1)
        if name == "cut":
            p.add_argument("--cap", action="store_true")
        if name in ("cut", "gen"):
            p.add_argument("-o", "--output")
        if name == "classify":
            p.add_argument("--certify", action="store_true")
        if name in ("classify", "verify", "gen"):
            p.add_argument("--seed", type=int)
        if name == "polygon":
            p.add_argument("--svg")
        if name == "gen":
            p.add_argument("--genus", type=int)
            p.add_argument("--refine", type=int, default=0)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=err)
        return 2
    except SurfaceError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
