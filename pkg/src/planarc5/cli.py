# src/planarc5/cli.py
"""
planarc5 command line.

    planarc5 count [--induced | --all] [--input FILE]
    planarc5 construct FAMILY N [--output STEM]
    planarc5 lemma {basic-bound,empty-k2k,min-load,sweep,gaps,k2m} ...
    planarc5 embed [--input FILE] [--outer-face I]
    planarc5 scan N [OBJECTIVE ...] [--workers K] [--checkpoint PATH] [--csv]
    planarc5 verify [--fast] [--csv]

graph6 is read from stdin unless --input is given. stdout carries JSON lines
(or CSV with --csv); logs go to stderr. Exit status is 0 on success, 1 on a
domain or verification failure and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from itertools import combinations
from typing import Any, Iterator, TextIO

from pydantic import BaseModel

from planarc5.config import Settings, get_settings
from planarc5.constructions.families import Family, build
from planarc5.counting.cycles import census
from planarc5.errors import Planarc5Error
from planarc5.evaluation.verify_suite import run_verify_suite
from planarc5.graphs.base import Graph
from planarc5.graphs.graph6 import graph6_encode, read_graph6
from planarc5.lemmas.basic_bound import basic_bound, lemma_one_sweep
from planarc5.lemmas.regions import find_empty_k2k, gap_profile, max_common_neighbors, min_vertex_load
from planarc5.planarity.embedding import embed, export_rotation
from planarc5.search.engine import ScanEngine
from planarc5.search.enumerate import SINGLE_VERTEX, check_limit, next_level
from planarc5.search.records import Objective, records_to_frame

logger = logging.getLogger("planarc5")

INDUCED_FIELDS = {"induced_c5", "induced_c4", "vertex_c5_load"}
TOTAL_FIELDS = {"c5_total", "c4_total"}


class Output:
    """JSON lines on stdout plus a sticky failure flag."""

    def __init__(self, stream: TextIO | None = None):
        self.stream = stream or sys.stdout
        self.failed = False

    def emit(self, payload: BaseModel | dict[str, Any]) -> None:
        if isinstance(payload, BaseModel):
            payload = payload.model_dump(mode="json")
        self.stream.write(json.dumps(payload) + "\n")

    def error(self, line: int, exc: Exception) -> None:
        self.failed = True
        self.emit({"line": line, "error": str(exc)})

    @property
    def code(self) -> int:
        return 1 if self.failed else 0


def _open_input(args: argparse.Namespace) -> TextIO:
    return open(args.input, "r") if args.input else sys.stdin


def _graphs(args: argparse.Namespace, out: Output) -> Iterator[tuple[int, Graph]]:
    stream = _open_input(args)
    try:
        for line_no, item in read_graph6(stream):
            if isinstance(item, Exception):
                out.error(line_no, item)
            else:
                yield line_no, item
    finally:
        if stream is not sys.stdin:
            stream.close()


def _per_line(args: argparse.Namespace, out: Output, fn) -> int:
    for line_no, g in _graphs(args, out):
        try:
            fn(line_no, g)
        except Planarc5Error as exc:
            logger.warning("line %d: %s", line_no, exc)
            out.error(line_no, exc)
    return out.code


# ---------------------------------------------------------------- count / embed


def cmd_count(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    fields = {"induced": INDUCED_FIELDS, "all": TOTAL_FIELDS}.get(args.mode)

    def one(line_no: int, g: Graph) -> None:
        report = census(g)
        out.emit(report.model_dump(include=fields) if fields else report)

    return _per_line(args, out, one)


def cmd_embed(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    def one(line_no: int, g: Graph) -> None:
        e = embed(g, outer_face=args.outer_face)
        out.emit(
            {
                "line": line_no,
                "rotation": export_rotation(e),
                "faces": [e.face_set.vertices(i) for i in range(len(e.face_set))],
                "outer_face": e.outer_face,
            }
        )

    return _per_line(args, out, one)


# ---------------------------------------------------------------- construct


def cmd_construct(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    g, spec = build(args.family, args.n)
    payload = {"graph6": graph6_encode(g), **spec.model_dump(mode="json")}
    if args.output:
        with open(f"{args.output}.g6", "w") as f:
            f.write(payload["graph6"] + "\n")
        with open(f"{args.output}.json", "w") as f:
            f.write(spec.model_dump_json(indent=2))
        logger.info("wrote %s.g6 and %s.json", args.output, args.output)
    out.emit(payload)
    return 0


# ---------------------------------------------------------------- lemma


def _lemma_basic_bound(args, settings, out):
    def one(line_no: int, g: Graph) -> None:
        report = basic_bound(g, args.v, args.u, args.w)
        if not report.sound:
            out.failed = True
        out.emit({"line": line_no, **report.model_dump(), "sound": report.sound})

    return _per_line(args, out, one)


def _lemma_empty_k2k(args, settings, out):
    def one(line_no: int, g: Graph) -> None:
        witnesses = find_empty_k2k(embed(g), args.k)
        out.emit({"line": line_no, "k": args.k, "witnesses": [w.model_dump() for w in witnesses]})

    return _per_line(args, out, one)


def _lemma_min_load(args, settings, out):
    def one(line_no: int, g: Graph) -> None:
        v, load = min_vertex_load(g)
        out.emit({"line": line_no, "vertex": v, "load": load, "bound": 2 * g.n / 3})

    return _per_line(args, out, one)


def _lemma_gaps(args, settings, out):
    def one(line_no: int, g: Graph) -> None:
        e = embed(g)
        if args.u is not None:
            pairs = [(args.u, args.w)]
        else:
            pairs = [(u, w) for u, w in combinations(range(g.n), 2) if (g.adj[u] & g.adj[w]).bit_count() >= 2]
        for u, w in pairs:
            out.emit({"line": line_no, "u": u, "w": w, "gaps": gap_profile(e, u, w)})

    return _per_line(args, out, one)


def _lemma_k2m(args, settings, out):
    def one(line_no: int, g: Graph) -> None:
        u, w, t = max_common_neighbors(g)
        out.emit({"line": line_no, "u": u, "w": w, "t": t})

    return _per_line(args, out, one)


def _lemma_sweep(args, settings, out):
    check_limit(args.limit, settings.scan_limit)
    level = [SINGLE_VERTEX]
    graphs = list(level)
    for _ in range(2, args.limit + 1):
        level = next_level(level)
        graphs.extend(level)
    result = lemma_one_sweep(graphs)
    for report in result.violations:
        out.emit({**report.model_dump(), "sound": False})
    out.emit({"limit": args.limit, "graphs": result.graphs, "checks": result.checks, "violations": len(result.violations)})
    return 1 if result.violations else 0


LEMMAS = {
    "basic-bound": _lemma_basic_bound,
    "empty-k2k": _lemma_empty_k2k,
    "min-load": _lemma_min_load,
    "sweep": _lemma_sweep,
    "gaps": _lemma_gaps,
    "k2m": _lemma_k2m,
}


def cmd_lemma(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    return LEMMAS[args.check](args, settings, out)


# ---------------------------------------------------------------- scan / verify


def _record_fixture(path: str, n: int, maximum: int) -> None:
    table: dict[str, int] = {}
    if os.path.exists(path):
        with open(path, "r") as f:
            table = json.load(f)
    table[str(n)] = maximum
    with open(path, "w") as f:
        json.dump(dict(sorted(table.items(), key=lambda kv: int(kv[0]))), f, indent=2)
        f.write("\n")
    logger.info("recorded induced_c5 maximum %d for n=%d in %s", maximum, n, path)


def cmd_scan(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    objectives = [Objective(o) for o in (args.objectives or []) + (args.objective or [])]
    if not objectives:
        objectives = [Objective.INDUCED_C5]
    if args.record_fixture and Objective.INDUCED_C5 not in objectives:
        objectives.append(Objective.INDUCED_C5)
    engine = ScanEngine(args.n, objectives, settings, checkpoint_path=args.checkpoint)
    records = engine.run(stop_after=args.stop_after)
    if records is None:
        logger.warning("scan n=%d interrupted after %s chunks; resume with --checkpoint", args.n, args.stop_after)
        return 0
    if args.record_fixture:
        _record_fixture(args.record_fixture, args.n, records[Objective.INDUCED_C5].maximum)
    if args.format == "csv":
        records_to_frame(list(records.values())).to_csv(out.stream, index=False)
    else:
        for record in records.values():
            out.emit(record)
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings, out: Output) -> int:
    result = run_verify_suite(fast=args.fast, settings=settings)
    if args.format == "csv":
        result.to_frame().to_csv(out.stream, index=False)
    else:
        for row in result.rows:
            out.emit(row)
        out.emit({"passed": result.passed, "rows": len(result.rows)})
    return 0 if result.passed else 1


# ---------------------------------------------------------------- parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _format_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json", default="json")
    group.add_argument("--csv", dest="format", action="store_const", const="csv")


def _input_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph6 file (default: stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarc5", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--no-progress", action="store_true", help="hide progress bars")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="C4/C5 census of each graph6 line")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--induced", dest="mode", action="store_const", const="induced")
    mode.add_argument("--all", dest="mode", action="store_const", const="all")
    _input_flag(p)
    p.set_defaults(func=cmd_count, mode=None)

    p = sub.add_parser("construct", help="build an extremal construction")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("n", type=int)
    p.add_argument("--output", metavar="STEM", help="also write STEM.g6 and STEM.json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("embed", help="rotation system and faces of each graph6 line")
    p.add_argument("--outer-face", type=int, default=None)
    _input_flag(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("lemma", help="structural checks")
    checks = p.add_subparsers(dest="check", required=True)
    c = checks.add_parser("basic-bound")
    c.add_argument("--v", type=int, required=True)
    c.add_argument("--u", type=int, required=True)
    c.add_argument("--w", type=int, required=True)
    _input_flag(c)
    c = checks.add_parser("empty-k2k")
    c.add_argument("--k", type=int, default=7)
    _input_flag(c)
    c = checks.add_parser("min-load")
    _input_flag(c)
    c = checks.add_parser("gaps")
    c.add_argument("--u", type=int, default=None)
    c.add_argument("--w", type=int, default=None)
    _input_flag(c)
    c = checks.add_parser("k2m")
    _input_flag(c)
    c = checks.add_parser("sweep")
    c.add_argument("--limit", type=_positive, default=7)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("scan", help="exhaustive extremal scan over connected planar graphs")
    p.add_argument("n", type=_positive)
    p.add_argument("objectives", nargs="*", metavar="OBJECTIVE")
    p.add_argument("--objective", action="append", choices=[o.value for o in Objective])
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--chunk-size", type=_positive, default=None)
    p.add_argument("--checkpoint", metavar="PATH", default=None)
    p.add_argument("--limit", type=_positive, default=None, help="raise the largest allowed n")
    p.add_argument("--stop-after", type=_non_negative, default=None, metavar="K", help="process K chunks then stop")
    p.add_argument("--record-fixture", metavar="PATH", default=None)
    _format_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="recompute the published values")
    p.add_argument("--fast", action="store_true", help="skip the n = 8 runs")
    _format_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    settings = get_settings()
    update: dict[str, Any] = {}
    for flag, field in (("workers", "workers"), ("chunk_size", "chunk_size"), ("limit", "scan_limit")):
        value = getattr(args, flag, None)
        if value is not None and args.command == "scan":
            update[field] = value
    if args.no_progress:
        update["progress"] = False
    if args.verbose:
        update["log_level"] = "DEBUG" if args.verbose > 1 else "INFO"
    return settings.model_copy(update=update)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lemma" and args.check == "gaps" and (args.u is None) != (args.w is None):
        parser.error("lemma gaps needs both --u and --w, or neither")
    if args.command == "scan":
        known = {o.value for o in Objective}
        for name in args.objectives:
            if name not in known:
                parser.error(f"unknown objective {name!r}; choose from {sorted(known)}")
    settings = _settings(args)
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    out = Output()
    try:
        return args.func(args, settings, out)
    except Planarc5Error as exc:
        logger.error("%s", exc)
        return 1
    except OSError as exc:
        logger.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
