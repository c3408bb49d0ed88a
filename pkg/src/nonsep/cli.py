"""Command line: ``nonsep classify | crosscheck | linkless``.

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 capacity guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from contextlib import nullcontext
from typing import ContextManager, Iterator, TextIO

from .crosscheck import MAX_CONNECTED, MAX_DISCONNECTED, corpus, run_crosscheck
from .graph import CapacityError, Graph, Graph6Error, is_connected, parse_graph6, to_graph6
from .linkless import VerificationError, sachs_family, verify_member
from .oracle import exists_nonseparating_drawing
from .structure import classify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


class InputError(ValueError):
    pass


def _emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _open(path: str) -> ContextManager[TextIO]:
    if path == "-":
        return nullcontext(sys.stdin)
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_graph6(stream: TextIO) -> Iterator[tuple[int, str, Graph | Exception]]:
    """(line number, text, graph or parse error) for every non-blank line."""
    for lineno, raw in enumerate(stream, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except (Graph6Error, CapacityError, ValueError) as exc:
            yield lineno, text, exc


def _load_corpus(path: str) -> list[Graph]:
    graphs = []
    with _open(path) as stream:
        for lineno, _, g in _read_graph6(stream):
            if isinstance(g, CapacityError):
                raise g
            if isinstance(g, Exception):
                raise InputError(f"{path}:{lineno}: {g}")
            graphs.append(g)
    return graphs


def cmd_classify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    code = EXIT_OK
    summary: Counter = Counter()
    with _open(args.file) as stream:
        for lineno, text, g in _read_graph6(stream):
            if isinstance(g, Exception):
                err.write(f"line {lineno}: {g}\n")
                code = max(code, EXIT_CAPACITY if isinstance(g, CapacityError) else EXIT_INPUT)
                continue
            c = classify(g)
            obj = {"line": lineno, "graph6": text, "n": g.n, "m": g.m, **c.to_json()}
            if args.verify:
                obj["verified"] = c.verify(g)
                if not obj["verified"]:
                    code = max(code, EXIT_MISMATCH)
            if args.expect is not None and c.verdict != args.expect:
                obj["expected"] = args.expect
                code = max(code, EXIT_MISMATCH)
            if args.emit_drawing:
                try:
                    d = exists_nonseparating_drawing(g)
                except CapacityError as exc:
                    err.write(f"line {lineno}: {exc}\n")
                    code = max(code, EXIT_CAPACITY)
                    d = None
                obj["drawing"] = None if d is None else d.to_json()
            summary[c.verdict] += 1
            summary[c.case] += 1
            _emit(out, obj)
    if args.summary:
        _emit(out, {"summary": dict(sorted(summary.items()))})
    return code


def cmd_crosscheck(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.source is not None:
        graphs = _load_corpus(args.source)
        n = max((g.n for g in graphs), default=0)
        for g in graphs:
            if g.n > MAX_CONNECTED or (g.n > MAX_DISCONNECTED and not is_connected(g)):
                raise CapacityError(f"corpus graph {to_graph6(g)} exceeds the crosscheck guard")
    else:
        graphs = corpus(args.n, args.include_disconnected)
        n = args.n
    report = run_crosscheck(graphs, n, jobs=args.jobs, inject_fault=args.inject_fault)
    _emit(out, report.to_json(stable=args.stable))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_linkless(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.source is not None:
        code = EXIT_OK
        for g in _load_corpus(args.source):
            g6 = to_graph6(g)
            try:
                report = verify_member(g, args.jobs)
                _emit(out, {"graph6": g6, "n": g.n, "m": g.m, "verdict": "maximal-linkless",
                            "maximal": report.maximal})
            except VerificationError as exc:
                err.write(f"{g6}: {exc}\n")
                _emit(out, {"graph6": g6, "n": g.n, "m": g.m, "verdict": "failed", "check": str(exc)})
                code = EXIT_MISMATCH
        return code
    try:
        members = sachs_family(args.max_len, jobs=args.jobs)
    except VerificationError as exc:
        err.write(f"{exc}\n")
        return EXIT_MISMATCH
    code = EXIT_OK
    for s in members:
        obj = {"graph6": to_graph6(s.graph), "verdict": "maximal-linkless", **s.to_json()}
        if args.recount:
            try:
                verify_member(parse_graph6(obj["graph6"]), args.jobs)
                obj["recount"] = True
            except VerificationError as exc:
                err.write(f"{obj['graph6']}: {exc}\n")
                obj["recount"] = False
                code = EXIT_MISMATCH
        _emit(out, obj)
    return code


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonsep", description="Recognise and certify non-separating planar graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify graph6 lines, one JSON certificate each")
    p.add_argument("file", nargs="?", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--verify", action="store_true", help="re-check every certificate")
    p.add_argument("--expect", choices=("member", "non-member"), help="fail unless every verdict matches")
    p.add_argument("--emit-drawing", action="store_true", help="attach a drawing with no separating cycle")
    p.add_argument("--summary", action="store_true", help="append a line of aggregate counts")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("crosscheck", help="compare all membership tests on every small graph")
    p.add_argument("--n", type=int, default=5, help="largest vertex count")
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--from", dest="source", metavar="FILE", help="graph6 corpus instead of the generator")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--stable", action="store_true", help="omit timings so output is reproducible")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(run=cmd_crosscheck)

    p = sub.add_parser("linkless", help="build and verify apex-augmented prisms")
    p.add_argument("--max-len", type=_positive, default=3, help="bound on the total side length")
    p.add_argument("--recount", action="store_true", help="re-verify each graph from its graph6 text")
    p.add_argument("--from", dest="source", metavar="FILE", help="verify the graphs in FILE instead")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(run=cmd_linkless)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out, err)
    except CapacityError as exc:
        err.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY
    except InputError as exc:
        err.write(f"input: {exc}\n")
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
