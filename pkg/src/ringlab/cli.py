"""``ringlab`` command line.

Exit codes: 0 success, 1 bad input or validation error, 2 property
failure under ``--strict``, 3 annihilator procedure stalled, 4 diagram
violation.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
from pathlib import Path

from . import annihilators as ann
from .catalog import (
    RingCorpus,
    builtin_corpus,
    builtin_ring,
    enumerate_unital_rings,
    load_corpus_dir,
    resolve_ring,
    save_ring,
)
from .diagram import check_diagram, evaluate_corpus, hunt_nonimplications, non_edges
from .errors import RingLabError
from .polynomial import format_coeffs, parse_poly
from .properties import PROPERTIES, McCoyBound, check_ring

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY, EXIT_STALL, EXIT_VIOLATION = 0, 1, 2, 3, 4

log = logging.getLogger("ringlab")


def default_bound() -> str:
    return os.environ.get("RINGLAB_MCCOY_BOUND", "2,2")


def _bound(text: str) -> McCoyBound:
    try:
        return McCoyBound.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Out:
    def __init__(self, path):
        self.path = path
        self.lines: list[str] = []

    def __call__(self, line: str = ""):
        self.lines.append(line)

    def flush(self):
        text = "".join(line + "\n" for line in self.lines)
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def cmd_check(args) -> int:
    ring = resolve_ring(args.ring)
    props = list(PROPERTIES) if args.all or not args.property else args.property
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise RingLabError(f"unknown property {unknown[0]!r}; choose from {', '.join(PROPERTIES)}")
    report = check_ring(ring, props, args.mccoy_bound)
    out = _Out(args.output)
    for line in report.lines():
        out(line)
    out.flush()
    if args.strict and any(v.fails for v in report.verdicts.values()):
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_annihilate(args) -> int:
    ring = resolve_ring(args.ring)
    f = parse_poly(ring, args.f)
    g = parse_poly(ring, args.g)
    out = _Out(args.output)
    if args.method in ("lemma1", "thm3"):
        if args.method == "lemma1":
            low, high = ann.lemma1_left_annihilators(f, g)
            labels = (f"a0^{g.degree + 1}", f"am^{g.degree + 1}")
            check = lambda s: ann.verify_left(s, g)  # noqa: E731
        else:
            low, high = ann.thm3_right_annihilators(f, g)
            labels = (f"b0^{f.degree + 1}", f"bn^{f.degree + 1}")
            check = lambda s: ann.verify_annihilation(f, s)  # noqa: E731
        out(f"method {args.method} f={format_coeffs(f)} g={format_coeffs(g)}")
        for label, value in zip(labels, (low, high)):
            out(f"formula {label} = {value} is_zero={'yes' if value == 0 else 'no'} "
                f"annihilates={'yes' if check(value) else 'no'}")
        out.flush()
        return EXIT_OK
    result, trace = ann.right_annihilator(f, g, args.method, args.variant)
    for line in trace.lines():
        out(line)
    out.flush()
    return EXIT_STALL if trace.stalled else EXIT_OK


def _load_corpus(spec: str) -> RingCorpus:
    corpus = RingCorpus()
    for part in spec.split(","):
        part = part.strip()
        if part == "builtin":
            corpus.extend(builtin_corpus())
        elif part.startswith("builtin:"):
            corpus.add(builtin_ring(part[len("builtin:"):]), "builtin")
        else:
            if not Path(part).is_dir():
                raise RingLabError(f"corpus directory {part!r} does not exist")
            corpus.extend(load_corpus_dir(part))
    return corpus


def cmd_diagram(args) -> int:
    corpus = _load_corpus(args.corpus)
    reports = evaluate_corpus(corpus, args.mccoy_bound, args.jobs)
    report = check_diagram(corpus, args.mccoy_bound, reports=reports)
    if args.hunt:
        report.hunted = hunt_nonimplications(corpus, non_edges(), args.mccoy_bound, reports=reports)
    out = _Out(args.output)
    for line in report.lines():
        out(line)
    out.flush()
    if args.csv:
        Path(args.csv).write_text(report.matrix_csv())
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _filename(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name) + ".ring"


def cmd_enumerate(args) -> int:
    corpus = enumerate_unital_rings(args.order)
    outdir = Path(args.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for ring in corpus:
        path = outdir / _filename(ring.name)
        save_ring(ring, path)
        print(path)
    return EXIT_OK


def cmd_export(args) -> int:
    ring = builtin_ring(args.name)
    save_ring(ring, args.path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide ring properties")
    p.add_argument("--ring", required=True, help="builtin:<name> or a .ring file")
    p.add_argument("--all", action="store_true", help="check every property (default)")
    p.add_argument("--property", action="append", help="property id; repeatable")
    p.add_argument("--mccoy-bound", type=_bound, default=default_bound())
    p.add_argument("--strict", action="store_true", help="exit 2 if any property fails")
    p.add_argument("--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("annihilate", help="ring-element annihilators of an annihilating pair")
    p.add_argument("--ring", required=True)
    p.add_argument("--f", required=True, help="coefficients low to high, e.g. 2,2")
    p.add_argument("--g", required=True)
    p.add_argument("--method", choices=["thm1", "lemma2", "lemma1", "thm3"], default="thm1")
    p.add_argument("--variant", choices=["alternative", "induction"], default="alternative")
    p.add_argument("--output")
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("diagram", help="check the implication diagram on a corpus")
    p.add_argument("--corpus", default="builtin",
                   help="'builtin', builtin:<name>, or a directory of .ring files; comma-separated")
    p.add_argument("--mccoy-bound", type=_bound, default=default_bound())
    p.add_argument("--hunt", action="store_true", help="also list separations for non-arrows")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="write the verdict matrix here")
    p.add_argument("--output")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("enumerate", help="write every unital ring of a small order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="write a builtin ring to a .ring file")
    p.add_argument("name")
    p.add_argument("path")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (RingLabError, OSError, KeyError) as exc:
        msg = f"unknown builtin ring {exc.args[0]!r}" if isinstance(exc, KeyError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
