"""Plain-text serialization for matroids and graphs.

Matroid document:  line 1 `matroid <name>`, line 2 the column labels,
then one 0/1 row per line (whitespace separated).  Graph document:
line 1 `graph <name>`, then one `endpoint endpoint label` line per
edge; vertices are implied by the edges in order of first appearance,
so isolated vertices are not representable.  Blank lines and `#`
comments are ignored on input and never emitted, which keeps
serialize(parse(serialize(x))) byte-identical to serialize(x).

The header keyword decides which object a file holds; nothing is
inferred from file names.
"""

from __future__ import annotations

from typing import Union

from .errors import EmptyGraph, FormatError
from .gf2 import Gf2Matrix
from .graphs import SimpleGraph
from .matroid import BinaryMatroid


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _header(lines: list[str], keyword: str) -> str:
    if not lines:
        raise FormatError("empty document")
    parts = lines[0].split(None, 1)
    if parts[0] != keyword:
        raise FormatError(
            f"expected header `{keyword} <name>`, got {lines[0]!r}")
    if len(parts) < 2 or not parts[1].strip():
        raise FormatError(f"{keyword} header is missing a name")
    return parts[1].strip()


def parse_matroid(text: str) -> BinaryMatroid:
    lines = _content_lines(text)
    name = _header(lines, "matroid")
    if len(lines) < 2:
        raise FormatError("matroid document has no label line")
    labels = tuple(lines[1].split())
    rows = []
    for line in lines[2:]:
        entries = line.split()
        if len(entries) != len(labels):
            raise FormatError(
                f"row {len(rows) + 1} has {len(entries)} entries, "
                f"expected {len(labels)}")
        try:
            row = [int(tok) for tok in entries]
        except ValueError:
            raise FormatError(f"non-numeric entry in row {len(rows) + 1}")
        if any(e not in (0, 1) for e in row):
            raise FormatError(f"entries must be 0 or 1 in row {len(rows) + 1}")
        rows.append(row)
    if not rows:
        raise FormatError("matroid document has no matrix rows")
    return BinaryMatroid(Gf2Matrix.from_rows(rows, labels), name=name)


def serialize_matroid(M: BinaryMatroid) -> str:
    lines = [f"matroid {M.name}", " ".join(M.ground)]
    for mask in M.matrix.row_masks():
        lines.append(" ".join(
            "1" if mask >> j & 1 else "0" for j in range(M.size)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    lines = _content_lines(text)
    name = _header(lines, "graph")
    edges = []
    verts: list[str] = []
    seen = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(
                f"edge line needs `endpoint endpoint label`, got {line!r}")
        u, v, lab = parts
        for x in (u, v):
            if x not in seen:
                seen.add(x)
                verts.append(x)
        edges.append((u, v, lab))
    if not edges:
        raise EmptyGraph(f"graph document {name!r} declares no edges")
    return SimpleGraph(name, tuple(verts), tuple(edges))


def serialize_graph(G: SimpleGraph) -> str:
    lines = [f"graph {G.name}"]
    for u, v, lab in G.edges:
        lines.append(f"{u} {v} {lab}")
    return "\n".join(lines) + "\n"


def parse_any(text: str) -> Union[BinaryMatroid, SimpleGraph]:
    """Dispatch on the header keyword of the first content line."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty document")
    keyword = lines[0].split(None, 1)[0]
    if keyword == "matroid":
        return parse_matroid(text)
    if keyword == "graph":
        return parse_graph(text)
    raise FormatError(
        f"unknown document type {keyword!r}; expected `matroid` or `graph`")
