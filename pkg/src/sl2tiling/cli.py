"""Command-line interface: generate, verify, convert, enumerate, render.

Exit codes: 0 ok, 2 parse error, 3 invalid triple, 4 validation failure,
5 unsupported conversion, 6 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from .embedding import PolygonPair, merge_into_common_polygon, polygons_from_triple
from .enumeration import (
    enumerate_quiddities,
    enumerate_S,
    enumerate_triangulations,
    enumerate_triples,
    quiddity_classes,
)
from .errors import (
    BoundExceeded,
    InvalidPolygon,
    InvalidTriple,
    NotAQuiddity,
    ParseError,
    SL2TilingError,
)
from .farey import FareyPolygon, Triangulation, polygon_quiddity, triangulate_farey_polygon
from .frieze import (
    FriezePattern,
    format_quiddity,
    frieze_from_quiddity,
    parse_quiddity,
    polygon_from_quiddity,
    quiddity_from_triangulation,
    triangulation_from_quiddity,
)
from .tiling import SL2Tiling, Triple, tiling_from_triple, triple_from_tiling, validate_tiling

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_TRIPLE = 3
EXIT_VALIDATION = 4
EXIT_UNSUPPORTED = 5
EXIT_BOUND = 6

KINDS = ("quiddity", "triangulation", "frieze", "polygon", "triple", "polygon-pair", "merged-ngon")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None


def _read_input(arg: str) -> str:
    """A path if one exists, ``-`` for stdin, otherwise the literal text."""
    if arg == "-" or os.path.isfile(arg):
        return _read_file(arg)
    return arg


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse(fn: Callable, text: str):
    try:
        return fn(text)
    except (ParseError, InvalidPolygon) as exc:
        raise _Fail(EXIT_PARSE, f"parse error: {exc}") from None


def format_triple_line(q: Sequence[int], qp: Sequence[int], M) -> str:
    return f"q=({format_quiddity(q)}) q'=({format_quiddity(qp)}) M={M}"


def parse_frieze(text: str) -> FriezePattern:
    """Read a staircase rendering (first line is row 1) back into a frieze."""
    try:
        rows = [[int(t) for t in ln.split()] for ln in text.strip().splitlines() if ln.strip()]
    except ValueError:
        raise ParseError("frieze rows must be whitespace-separated integers") from None
    if not rows:
        raise ParseError("empty frieze")
    n = len(rows[0]) + 1
    if n < 3 or len(rows) < n:
        raise ParseError(f"need {n} rows of {n - 1} entries to read a frieze")
    q = tuple(rows[k][1] if n > 3 else rows[k][-1] for k in range(n))
    try:
        f = frieze_from_quiddity(q)
    except NotAQuiddity as exc:
        raise ParseError(f"rows do not form a frieze: {exc}") from None
    for k, r in enumerate(rows):
        if tuple(r) != f.row(k + 1):
            raise ParseError(f"row {k + 1} is inconsistent with the frieze")
    return f


# --- convert ---------------------------------------------------------------

def _to_quiddity(kind: str, text: str) -> tuple[int, ...]:
    if kind == "quiddity":
        return parse_quiddity(text)
    if kind == "triangulation":
        return quiddity_from_triangulation(Triangulation.parse(text))
    if kind == "frieze":
        return parse_frieze(text).quiddity
    if kind == "polygon":
        return polygon_quiddity(FareyPolygon.parse(text))
    raise AssertionError(kind)


def _convert(src: str, dst: str, text: str) -> str:
    combinatorial = ("quiddity", "triangulation", "frieze", "polygon")
    if src in combinatorial and dst in combinatorial and src != dst:
        if src == "polygon" and dst == "triangulation":
            return str(triangulate_farey_polygon(FareyPolygon.parse(text)))
        q = _to_quiddity(src, text)
        if dst == "quiddity":
            return format_quiddity(q)
        if dst == "triangulation":
            return str(triangulation_from_quiddity(q))
        if dst == "frieze":
            return frieze_from_quiddity(q).render()
        return str(polygon_from_quiddity(q))
    if src == "triple" and dst in ("polygon-pair", "merged-ngon"):
        pp = polygons_from_triple(Triple.parse(text))
        if dst == "polygon-pair":
            return str(pp)
        return f"N: {merge_into_common_polygon(pp)}"
    if src == "polygon-pair" and dst == "merged-ngon":
        return f"N: {merge_into_common_polygon(PolygonPair.parse(text))}"
    raise _Fail(EXIT_UNSUPPORTED, f"unsupported conversion {src} -> {dst}")


def cmd_convert(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    try:
        out = _convert(args.src, args.dst, text)
    except (ParseError, InvalidPolygon) as exc:
        raise _Fail(EXIT_PARSE, f"parse error: {exc}") from None
    except InvalidTriple as exc:
        raise _Fail(EXIT_TRIPLE, f"invalid triple: {exc}") from None
    except NotAQuiddity as exc:
        raise _Fail(EXIT_PARSE, f"not a quiddity: {exc}") from None
    _emit(out, args.out)
    return EXIT_OK


# --- generate / verify -----------------------------------------------------

def cmd_generate(args: argparse.Namespace) -> int:
    tr = _parse(Triple.parse, _read_file(args.triple_file))
    try:
        t = tiling_from_triple(tr)
    except InvalidTriple as exc:
        raise _Fail(EXIT_TRIPLE, f"invalid triple: {exc}") from None
    _emit(str(t), args.out)
    if args.render:
        _emit(t.render(), None)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    t = _parse(SL2Tiling.parse, _read_file(args.tiling_file))
    report = validate_tiling(t)
    print(report)
    ok = report.ok
    try:
        tr = triple_from_tiling(t, strict=ok)
    except SL2TilingError as exc:
        print(f"{type(exc).__name__}: {exc}")
        ok = False
    else:
        print(format_triple_line(tr.q, tr.qprime, tr.M))
    print("result: pass" if ok else "result: FAIL")
    return EXIT_OK if ok else EXIT_VALIDATION


# --- enumerate -------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    kind = args.kind
    try:
        if kind == "triangulations":
            items = [str(t) for t in enumerate_triangulations(_need(args.n, "--n"))]
        elif kind == "quiddities":
            if args.classes:
                classes = quiddity_classes(_need(args.n, "--n"))
                items = [f"{format_quiddity(k)} size={len(v)}" for k, v in classes.items()]
            else:
                items = [format_quiddity(q) for q in enumerate_quiddities(_need(args.n, "--n"))]
        elif kind == "s-matrices":
            items = [str(M) for M in enumerate_S(_need(args.bound, "--bound"))]
        else:
            n, m = _need(args.n, "--n"), _need(args.m, "--m")
            items = (
                f"{format_quiddity(tr.q)} | {format_quiddity(tr.qprime)} | {tr.M}"
                for tr in enumerate_triples(n, m, _need(args.bound, "--bound"))
            )
            if args.count_only:
                print(sum(1 for _ in items))
                return EXIT_OK
            for line in items:
                print(line)
            return EXIT_OK
    except BoundExceeded as exc:
        raise _Fail(EXIT_BOUND, f"bound exceeded: {exc}") from None
    if args.count_only:
        print(len(items))
    else:
        for line in items:
            print(line)
    return EXIT_OK


def _need(value: int | None, flag: str) -> int:
    if value is None:
        raise _Fail(EXIT_PARSE, f"missing {flag}")
    return value


# --- render ----------------------------------------------------------------

def cmd_render(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    if args.kind == "tiling":
        out = _parse(SL2Tiling.parse, text).render()
    elif args.kind == "triple":
        tr = _parse(Triple.parse, text)
        try:
            out = tiling_from_triple(tr).render()
        except InvalidTriple as exc:
            raise _Fail(EXIT_TRIPLE, f"invalid triple: {exc}") from None
    else:
        q = _parse(parse_quiddity, text)
        try:
            out = frieze_from_quiddity(q).render(args.first_row, args.rows)
        except NotAQuiddity as exc:
            raise _Fail(EXIT_PARSE, f"not a quiddity: {exc}") from None
    _emit(out, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2tiling",
        description="Frieze patterns, Farey polygons and antiperiodic SL2-tilings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a tiling file from a triple file")
    p.add_argument("triple_file")
    p.add_argument("--out", help="write the tiling file here instead of stdout")
    p.add_argument("--render", action="store_true", help="also print the 2m x 2n window")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="validate a tiling file and extract its triple")
    p.add_argument("tiling_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between combinatorial models")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("input", help="file path, '-' for stdin, or literal text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="exhaustive enumeration")
    p.add_argument("kind", choices=("triangulations", "quiddities", "s-matrices", "triples"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--classes", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="print a frieze staircase or a tiling window")
    p.add_argument("kind", choices=("frieze", "tiling", "triple"))
    p.add_argument("input", help="file path, '-' for stdin, or literal text")
    p.add_argument("--first-row", type=int, default=1)
    p.add_argument("--rows", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
