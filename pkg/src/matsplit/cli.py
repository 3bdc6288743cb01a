"""Command-line frontend.

Verbs: info, split, verify, graph-split, reduce-cubic, catalog.  Inputs
are file paths (the header line decides matroid vs graph) or catalog
names.  Exit codes: 0 all checks passed, 1 a verified statement failed,
2 usage or input trouble.  Output is deterministic: identical inputs
give byte-identical documents, tables, and report files.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Union

from . import catalog, formats
from .coextension import classify_circuits, classify_cocircuits, element_split
from .connectivity import connectivity, is_n_connected
from .errors import (GroundSetTooLarge, HypothesisViolated, MatsplitError,
                     TContainsCocircuit, TheoremViolation)
from .graphs import (SimpleGraph, cycle_matroid, graph_girth, point_split,
                     reduce_to_cubic, slater_check, vertex_connectivity)
from .matroid import BinaryMatroid
from .theorems import VerificationReport, verify_equivalence

USAGE_ERROR = 2
VIOLATION = 1


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_any(source: str) -> Union[BinaryMatroid, SimpleGraph]:
    if os.path.exists(source):
        return formats.parse_any(_read(source))
    try:
        return catalog.catalog_matroid(source)
    except MatsplitError:
        try:
            return catalog.catalog_graph(source)
        except MatsplitError:
            raise MatsplitError(
                f"{source!r} is neither an existing file nor a catalog name")


def _load_matroid(source: str) -> BinaryMatroid:
    """File or catalog name; graphs are bridged by their cycle matroid."""
    loaded = _load_any(source)
    if isinstance(loaded, SimpleGraph):
        return cycle_matroid(loaded)
    return loaded


def _load_graph(source: str) -> SimpleGraph:
    """Graph verbs look the name up in the graph namespace first."""
    if os.path.exists(source):
        loaded = formats.parse_any(_read(source))
        if not isinstance(loaded, SimpleGraph):
            raise MatsplitError(
                f"{source!r} holds a matroid; this verb needs a graph")
        return loaded
    return catalog.catalog_graph(source)


def _labels(arg: str) -> frozenset[str]:
    parts = [p.strip() for p in arg.split(",") if p.strip()]
    if not parts:
        raise MatsplitError("expected a comma-separated label list")
    return frozenset(parts)


def _conn_str(value) -> str:
    return "infinite" if value == math.inf else str(value)


def _bool_str(value: bool) -> str:
    return "yes" if value else "no"


# -- report emission --------------------------------------------------------


def _record_lines(reports: list[VerificationReport]) -> list[str]:
    return [json.dumps(r.to_record()) for r in reports]


def _witness_cell(report: VerificationReport) -> str:
    parts = []
    for w in report.witnesses:
        parts.append(f"{w.kind}[{','.join(sorted(w.elements))}]")
    return "; ".join(parts)


def _table_lines(reports: list[VerificationReport]) -> list[str]:
    header = ["matroid", "n", "t", "i", "ii", "iii", "weak", "equivalent",
              "witnesses"]
    rows = [header]
    for r in reports:
        rows.append([
            r.matroid_name,
            str(r.n),
            ",".join(sorted(r.t_set)),
            _bool_str(r.stmt_i),
            _bool_str(r.stmt_ii),
            _bool_str(r.stmt_iii),
            "-" if r.weak is None else _bool_str(r.weak),
            _bool_str(r.equivalent),
            _witness_cell(r),
        ])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    out = []
    for row in rows:
        out.append("  ".join(cell.ljust(w)
                             for cell, w in zip(row, widths)).rstrip())
    return out


def emit_report(reports: list[VerificationReport], fmt: str,
                out_path: Optional[str], write) -> None:
    """Table or records to the writer; records additionally to a file."""
    if fmt == "records":
        for line in _record_lines(reports):
            write(line)
    else:
        for line in _table_lines(reports):
            write(line)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(_record_lines(reports)) + "\n")


# -- verbs ------------------------------------------------------------------


def _cmd_info(args, write) -> int:
    loaded = _load_any(args.source)
    if isinstance(loaded, SimpleGraph):
        G = loaded
        write(f"graph {G.name}")
        write(f"vertices: {len(G.vertices)}")
        write(f"edges: {len(G.edges)}")
        write(f"connectivity: {vertex_connectivity(G)}")
        write(f"girth: {_conn_str(graph_girth(G))}")
        write("")
        M = cycle_matroid(G)
    else:
        M = loaded
    write(f"matroid {M.name}")
    write(f"elements: {M.size}")
    write(f"rank: {M.rank}")
    write(f"girth: {_conn_str(M.girth())}")
    write(f"cogirth: {_conn_str(M.cogirth())}")
    try:
        write(f"connectivity: {_conn_str(connectivity(M))}")
    except GroundSetTooLarge as exc:
        write(f"connectivity: not computed ({exc})")
    write(f"circuits: {len(M.circuits())}")
    write(f"cocircuits: {len(M.cocircuits())}")
    return 0


def _cmd_split(args, write) -> int:
    M = _load_matroid(args.source)
    t_set = _labels(args.t)
    split = element_split(M, t_set, args.label)
    N = split.result
    write(formats.serialize_matroid(N).rstrip("\n"))
    try:
        write(f"connectivity: {_conn_str(connectivity(N))}")
        base_conn = connectivity(M)
        if base_conn != math.inf:
            ok = is_n_connected(N, base_conn)
            write(f"{base_conn}-connected: {_bool_str(ok)}")
    except GroundSetTooLarge as exc:
        write(f"connectivity: not computed ({exc})")

    code = 0
    circ = classify_circuits(M, t_set, args.label)
    counts = " ".join(
        f"{tag}={len(circ.members(tag))}" for tag in ("C1", "C2", "C3"))
    write(f"circuit classes: {counts} violations={len(circ.violations)}")
    for v in circ.violations:
        write(f"  violation {v.attempted} "
              f"[{','.join(sorted(v.elements))}]: {v.reason}")
        code = VIOLATION
    try:
        cocirc = classify_cocircuits(M, t_set, args.label)
    except TContainsCocircuit as exc:
        write(f"cocircuit classes: skipped ({exc})")
    else:
        counts = " ".join(
            f"{tag}={len(cocirc.members(tag))}"
            for tag in ("Q1", "Q2", "Q3", "Q4", "Q5"))
        write(f"cocircuit classes: {counts} "
              f"overlaps={len(cocirc.overlaps)} "
              f"violations={len(cocirc.violations)}")
        for v in cocirc.violations:
            write(f"  violation {v.attempted} "
                  f"[{','.join(sorted(v.elements))}]: {v.reason}")
            code = VIOLATION
    return code


def _cmd_verify(args, write) -> int:
    M = _load_matroid(args.source)
    reports = verify_equivalence(M, args.n, jobs=args.jobs)
    emit_report(reports, args.format, args.out, write)
    bad = [r for r in reports if not r.equivalent]
    if bad:
        write(f"NOT EQUIVALENT on {len(bad)} of {len(reports)} rows")
        return VIOLATION
    write(f"equivalent on all {len(reports)} rows")
    return 0


def _cmd_graph_split(args, write) -> int:
    G = _load_graph(args.source)
    t_set = _labels(args.edges)
    try:
        report = slater_check(G, args.n, args.vertex, t_set)
    except HypothesisViolated as exc:
        write(f"hypothesis violated: {exc}")
        try:
            raw = point_split(G, args.vertex, t_set)
            write(f"raw split connectivity: "
                  f"{vertex_connectivity(raw.graph)} (no claim)")
        except MatsplitError:
            pass
        return USAGE_ERROR
    write(f"split connectivity >= {args.n}: "
          f"{_bool_str(report.split_connectivity_ok)}")
    write(f"cycle matroid matches element split: "
          f"{_bool_str(report.bridge_identity_ok)}")
    write(f"cocircuit condition: "
          f"{_bool_str(report.cocircuit_condition_ok)}")
    write(f"passed: {_bool_str(report.passed)}")
    return 0 if report.passed else VIOLATION


def _cmd_reduce_cubic(args, write) -> int:
    G = _load_graph(args.source)
    steps, final = reduce_to_cubic(G)
    for i, step in enumerate(steps, start=1):
        write(f"step {i}: bridge {step.bridge_edge} "
              f"splits into {step.u} and {step.w}")
    write(f"steps: {len(steps)}")
    write(f"final: {len(final.vertices)} vertices, "
          f"{len(final.edges)} edges, 3-regular, 3-connected")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(formats.serialize_graph(final))
    return 0


def _cmd_catalog(args, write) -> int:
    name = args.name
    if args.kind == "matroid":
        doc = formats.serialize_matroid(catalog.catalog_matroid(name))
    elif args.kind == "graph":
        doc = formats.serialize_graph(catalog.catalog_graph(name))
    else:
        try:
            doc = formats.serialize_matroid(catalog.catalog_matroid(name))
        except MatsplitError:
            doc = formats.serialize_graph(catalog.catalog_graph(name))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        write(doc.rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matsplit",
        description="element splitting and connectivity checks "
                    "for binary matroids and graphs")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="rank, girth, connectivity, counts")
    p.add_argument("source", help="file path or catalog name")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("split", help="element splitting M'_T")
    p.add_argument("source")
    p.add_argument("--t", required=True, help="comma-separated labels of T")
    p.add_argument("--label", default="a", help="name for the new element")
    p.set_defaults(fn=_cmd_split)

    p = sub.add_parser("verify",
                       help="equivalence sweep over every T of size n-1")
    p.add_argument("source")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "records"), default="table")
    p.add_argument("--out", help="write machine-readable records here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("graph-split", help="n-point splitting check")
    p.add_argument("source")
    p.add_argument("--vertex", required=True)
    p.add_argument("--edges", required=True,
                   help="comma-separated edge labels at the vertex")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_graph_split)

    p = sub.add_parser("reduce-cubic",
                       help="split down to a 3-regular 3-connected graph")
    p.add_argument("source")
    p.add_argument("--out", help="write the final graph document here")
    p.set_defaults(fn=_cmd_reduce_cubic)

    p = sub.add_parser("catalog", help="emit a built-in instance")
    p.add_argument("name")
    p.add_argument("--kind", choices=("matroid", "graph", "auto"),
                   default="auto")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def write(line: str) -> None:
        print(line)

    try:
        return args.fn(args, write)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return VIOLATION
    except MatsplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
