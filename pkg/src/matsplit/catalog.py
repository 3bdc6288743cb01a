"""Built-in instances: the Fano pair plus a shelf of graphic matroids.

Everything is generated from explicit matrices or from graph
constructors, never loaded from files, so the catalog is available
wherever the package is.  Lookup is by case-insensitive name; graphs
and matroids have separate namespaces since K33 means both the graph
and its cycle matroid.
"""

from __future__ import annotations

import itertools

from .errors import UnknownLabel
from .gf2 import Gf2Matrix
from .graphs import SimpleGraph, cycle_matroid
from .matroid import BinaryMatroid

MATROID_NAMES = ("F7", "F7*", "MK4", "MK5", "W3", "W4", "W5",
                 "PETERSEN", "K33", "K46", "Q3")
GRAPH_NAMES = ("K4", "K5", "K33", "K44", "K46", "W3", "W4", "W5",
               "PETERSEN", "Q3")

_ALIASES = {"F7DUAL": "F7*", "FANO": "F7"}


def _edge(u: str, v: str) -> tuple[str, str, str]:
    return u, v, "".join(sorted((u, v)))


def fano() -> BinaryMatroid:
    """The seven-point plane, elements 1..7."""
    rows = [
        [1, 0, 0, 1, 1, 0, 1],
        [0, 1, 0, 1, 1, 1, 0],
        [0, 0, 1, 1, 0, 1, 1],
    ]
    labels = tuple(str(i) for i in range(1, 8))
    return BinaryMatroid(Gf2Matrix.from_rows(rows, labels), name="F7")


def complete_graph(n: int) -> SimpleGraph:
    """K_n with vertices 1..n and edges labeled by their endpoints."""
    verts = tuple(str(i) for i in range(1, n + 1))
    edges = tuple(_edge(u, v)
                  for u, v in itertools.combinations(verts, 2))
    return SimpleGraph(f"K{n}", verts, edges)


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    """K_{m,n} on vertex classes a1..am and b1..bn."""
    left = tuple(f"a{i}" for i in range(1, m + 1))
    right = tuple(f"b{i}" for i in range(1, n + 1))
    edges = tuple(_edge(u, v)
                  for u, v in itertools.product(left, right))
    return SimpleGraph(f"K{m}{n}", left + right, edges)


def wheel_graph(n: int) -> SimpleGraph:
    """Hub h joined to an n-cycle r1..rn; 2n edges."""
    if n < 3:
        raise ValueError("a wheel needs a rim of at least 3 vertices")
    rim = tuple(f"r{i}" for i in range(1, n + 1))
    edges = [_edge("h", r) for r in rim]
    edges += [_edge(rim[i], rim[(i + 1) % n]) for i in range(n)]
    return SimpleGraph(f"W{n}", ("h",) + rim, tuple(edges))


def petersen_graph() -> SimpleGraph:
    outer = tuple(f"o{i}" for i in range(1, 6))
    inner = tuple(f"i{i}" for i in range(1, 6))
    edges = [_edge(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [_edge(inner[i], outer[i]) for i in range(5)]
    edges += [_edge(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    return SimpleGraph("Petersen", outer + inner, tuple(edges))


def hypercube_graph(dim: int) -> SimpleGraph:
    """Q_dim on binary-string vertices; edges join Hamming neighbors."""
    if dim < 1:
        raise ValueError("hypercube dimension must be positive")
    verts = tuple(format(i, f"0{dim}b") for i in range(1 << dim))
    edges = []
    for i, u in enumerate(verts):
        for b in range(dim):
            j = i ^ (1 << b)
            if j > i:
                edges.append(_edge(u, verts[j]))
    return SimpleGraph(f"Q{dim}", verts, tuple(edges))


_GRAPH_BUILDERS = {
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K33": lambda: complete_bipartite(3, 3),
    "K44": lambda: complete_bipartite(4, 4),
    "K46": lambda: complete_bipartite(4, 6),
    "W3": lambda: wheel_graph(3),
    "W4": lambda: wheel_graph(4),
    "W5": lambda: wheel_graph(5),
    "PETERSEN": petersen_graph,
    "Q3": lambda: hypercube_graph(3),
}

_MATROID_BUILDERS = {
    "F7": fano,
    "F7*": lambda: fano().dual(),
    "MK4": lambda: cycle_matroid(complete_graph(4)),
    "MK5": lambda: cycle_matroid(complete_graph(5)),
    "W3": lambda: cycle_matroid(wheel_graph(3)),
    "W4": lambda: cycle_matroid(wheel_graph(4)),
    "W5": lambda: cycle_matroid(wheel_graph(5)),
    "PETERSEN": lambda: cycle_matroid(petersen_graph()),
    "K33": lambda: cycle_matroid(complete_bipartite(3, 3)),
    "K46": lambda: cycle_matroid(complete_bipartite(4, 6)),
    "Q3": lambda: cycle_matroid(hypercube_graph(3)),
}


def _normalize(name: str) -> str:
    key = name.strip().upper()
    return _ALIASES.get(key, key)


def catalog_matroid(name: str) -> BinaryMatroid:
    key = _normalize(name)
    if key not in _MATROID_BUILDERS:
        raise UnknownLabel(
            f"no catalog matroid {name!r}; choices: {', '.join(MATROID_NAMES)}")
    return _MATROID_BUILDERS[key]()


def catalog_graph(name: str) -> SimpleGraph:
    key = _normalize(name)
    if key not in _GRAPH_BUILDERS:
        raise UnknownLabel(
            f"no catalog graph {name!r}; choices: {', '.join(GRAPH_NAMES)}")
    return _GRAPH_BUILDERS[key]()


def all_matroids() -> list[BinaryMatroid]:
    return [catalog_matroid(k) for k in MATROID_NAMES]


def all_graphs() -> list[SimpleGraph]:
    return [catalog_graph(k) for k in GRAPH_NAMES]
