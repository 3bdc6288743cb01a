"""Simple graphs, point splitting, and the cycle-matroid bridge.

Point splitting replaces a vertex v by two adjacent vertices u and w:
u takes the chosen edge set T (keeping labels), w takes the rest, and a
fresh bridge edge joins them.  On cycle matroids this is exactly the
element-splitting coextension with the bridge as the new element, and
`slater_check` verifies that identity together with the connectivity
statement it supports.

Vertex connectivity is exhaustive cut search (|V| capped at 16) with
the complete-graph convention kappa(K_m) = m - 1; girth is BFS-based.
Both are deliberately brute force: they serve as oracles, so they favor
auditability over speed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .coextension import element_split
from .errors import (DegreeTooSmall, DuplicateLabel, EdgeNotAtV, EmptyGraph,
                     EmptyT, GroundSetTooLarge, HypothesisViolated,
                     InvalidArguments, LabelCollision, NotThreeConnected,
                     TheoremViolation, TooFewVertices, UnknownLabel)
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid

VERTEX_CAP = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph with labeled edges.

    Vertices and edges keep their construction order; edge tuples are
    (endpoint, endpoint, label).  No self-loops, no parallel edges:
    the splitting theory here is stated for simple graphs.
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges",
                           tuple(tuple(e) for e in self.edges))
        seen_v = set()
        for v in self.vertices:
            if v in seen_v:
                raise DuplicateLabel(f"duplicate vertex {v!r}")
            seen_v.add(v)
        seen_e = set()
        seen_pair = set()
        for u, v, lab in self.edges:
            if u not in seen_v or v not in seen_v:
                raise UnknownLabel(f"edge {lab!r} uses undeclared endpoint")
            if u == v:
                raise InvalidArguments(
                    f"edge {lab!r} is a self-loop; only simple graphs are supported")
            if lab in seen_e:
                raise DuplicateLabel(f"duplicate edge label {lab!r}")
            pair = frozenset((u, v))
            if pair in seen_pair:
                raise InvalidArguments(
                    f"parallel edge {lab!r}; multigraphs are not supported "
                    "(the splitting theory here assumes simple graphs)")
            seen_e.add(lab)
            seen_pair.add(pair)

    # -- accessors ----------------------------------------------------

    def edge_labels(self) -> tuple[str, ...]:
        return tuple(lab for _, _, lab in self.edges)

    def endpoints(self, label: str) -> tuple[str, str]:
        for u, v, lab in self.edges:
            if lab == label:
                return u, v
        raise UnknownLabel(f"unknown edge label {label!r}")

    def incident(self, v: str) -> tuple[str, ...]:
        """Labels of edges at v, in edge order."""
        if v not in self.vertices:
            raise UnknownLabel(f"unknown vertex {v!r}")
        return tuple(lab for a, b, lab in self.edges if v in (a, b))

    def degree(self, v: str) -> int:
        return len(self.incident(v))

    def neighbors(self, v: str) -> frozenset[str]:
        if v not in self.vertices:
            raise UnknownLabel(f"unknown vertex {v!r}")
        out = set()
        for a, b, _ in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return frozenset(out)

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def without_vertices(self, drop: Iterable[str]) -> "SimpleGraph":
        drop = set(drop)
        verts = tuple(v for v in self.vertices if v not in drop)
        edges = tuple((u, v, lab) for u, v, lab in self.edges
                      if u not in drop and v not in drop)
        return SimpleGraph(self.name, verts, edges)


@dataclass(frozen=True)
class SplitResult:
    graph: SimpleGraph
    u: str
    w: str
    bridge_edge: str


@dataclass(frozen=True)
class SlaterReport:
    """Everything checked for one admissible (G, v, T) split."""

    graph_name: str
    n: int
    vertex: str
    t_set: frozenset[str]
    split_connectivity_ok: bool      # kappa(G'_T) >= n
    bridge_identity_ok: bool         # M(G'_T) == element split of M(G)
    cocircuit_condition_ok: bool     # the characterizing condition on M(G)

    @property
    def passed(self) -> bool:
        return (self.split_connectivity_ok and self.bridge_identity_ok
                and self.cocircuit_condition_ok)


def _fresh_vertex(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    i = 2
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def point_split(G: SimpleGraph, v: str, T: Iterable[str],
                bridge_label: str = "a") -> SplitResult:
    """Split v into adjacent u (taking the T edges) and w (the rest).

    Needs deg(v) >= 2|T| (the degree hypothesis with n = |T|+1) and
    |T| < deg(v) so w keeps at least one original edge.
    """
    t_set = frozenset(T)
    if not t_set:
        raise EmptyT("edge set T must be nonempty")
    star = set(G.incident(v))            # raises UnknownLabel for bad v
    labels = set(G.edge_labels())
    for lab in t_set:
        if lab not in labels:
            raise UnknownLabel(f"unknown edge label {lab!r}")
        if lab not in star:
            raise EdgeNotAtV(f"edge {lab!r} is not incident to {v!r}")
    deg = len(star)
    if deg < 2 * len(t_set):
        raise DegreeTooSmall(
            f"deg({v}) = {deg} < 2|T| = {2 * len(t_set)}")
    if len(t_set) >= deg:
        raise DegreeTooSmall(
            f"|T| = {len(t_set)} must stay below deg({v}) = {deg}")
    if bridge_label in labels:
        raise LabelCollision(f"edge label {bridge_label!r} already in use")

    taken = set(G.vertices) - {v}
    u = _fresh_vertex(f"{v}u", taken)
    taken.add(u)
    w = _fresh_vertex(f"{v}w", taken)

    verts = []
    for x in G.vertices:
        if x == v:
            verts.extend((u, w))
        else:
            verts.append(x)
    edges = []
    for a, b, lab in G.edges:
        if v in (a, b):
            other = b if a == v else a
            repl = u if lab in t_set else w
            edges.append((repl, other, lab) if a == v else (other, repl, lab))
        else:
            edges.append((a, b, lab))
    edges.append((u, w, bridge_label))
    graph = SimpleGraph(f"{G.name}+{bridge_label}", tuple(verts), tuple(edges))
    return SplitResult(graph=graph, u=u, w=w, bridge_edge=bridge_label)


def cycle_matroid(G: SimpleGraph) -> BinaryMatroid:
    """Binary matroid of the vertex-edge incidence matrix.

    Columns are edge labels; circuits come out as the edge sets of the
    cycles of G.  Keeping all |V| rows is fine: canonicalization drops
    the dependent ones.
    """
    if not G.edges:
        raise EmptyGraph(f"{G.name} has no edges")
    index = {v: i for i, v in enumerate(G.vertices)}
    masks = [0] * len(G.vertices)
    for j, (a, b, _) in enumerate(G.edges):
        masks[index[a]] |= 1 << j
        masks[index[b]] |= 1 << j
    m = Gf2Matrix.from_masks(masks, G.edge_labels())
    return BinaryMatroid(m, name=f"M({G.name})")


def vertex_connectivity(G: SimpleGraph) -> int:
    """Minimum vertex-cut size; complete graphs give |V| - 1.

    Exhaustive search over separator candidates in increasing size,
    lexicographic within a size (vertex order as declared).
    """
    nv = len(G.vertices)
    if nv < 2:
        raise TooFewVertices("connectivity needs at least two vertices")
    if nv > VERTEX_CAP:
        raise GroundSetTooLarge(
            f"{nv} vertices exceed the cut-search cap {VERTEX_CAP}")
    if not G.is_connected():
        return 0
    pairs = {frozenset((a, b)) for a, b, _ in G.edges}
    if all(frozenset(p) in pairs
           for p in itertools.combinations(G.vertices, 2)):
        return nv - 1
    for size in range(1, nv - 1):
        for cut in itertools.combinations(G.vertices, size):
            rest = G.without_vertices(cut)
            if len(rest.vertices) >= 2 and not rest.is_connected():
                return size
    return nv - 1                        # unreachable for non-complete G


def graph_girth(G: SimpleGraph) -> Union[int, float]:
    """Length of a shortest cycle, math.inf for forests.

    BFS from every vertex; any non-tree edge closes a walk of length
    dist(x) + dist(y) + 1 that contains a cycle no longer than itself,
    and a BFS rooted on a shortest cycle meets it exactly.
    """
    adj = G.adjacency()
    best = math.inf
    for root in G.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            nxt = []
            for x in queue:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        for a, b, _ in G.edges:
            if a in dist and b in dist \
                    and parent.get(a) != b and parent.get(b) != a:
                best = min(best, dist[a] + dist[b] + 1)
    return best


def slater_check(G: SimpleGraph, n: int, v: str, T: Iterable[str],
                 bridge_label: str = "a") -> SlaterReport:
    """Check the splitting statement on one admissible (G, v, T).

    Hypotheses (each raises HypothesisViolated naming itself): |T| = n-1,
    T incident to v, deg(v) >= 2n-2, G n-connected, girth(G) >= n.  Then
    the split graph must be n-connected, its cycle matroid must equal
    the element splitting of M(G) by T, and M(G) must satisfy the
    cocircuit condition |Q| >= 2|Q cap T|.
    """
    if n < 2:
        raise InvalidArguments(f"n must be >= 2, got {n}")
    t_set = frozenset(T)
    if v not in G.vertices:
        raise UnknownLabel(f"unknown vertex {v!r}")
    star = set(G.incident(v))
    if len(t_set) != n - 1:
        raise HypothesisViolated(f"|T| = {len(t_set)} but n-1 = {n - 1}")
    labels = set(G.edge_labels())
    for lab in t_set:
        if lab not in labels:
            raise UnknownLabel(f"unknown edge label {lab!r}")
        if lab not in star:
            raise HypothesisViolated(f"edge {lab!r} is not incident to {v!r}")
    if len(star) < 2 * n - 2:
        raise HypothesisViolated(
            f"deg({v}) = {len(star)} < 2n-2 = {2 * n - 2}")
    if vertex_connectivity(G) < n:
        raise HypothesisViolated(f"{G.name} is not {n}-connected")
    girth = graph_girth(G)
    if girth < n:
        raise HypothesisViolated(f"girth {girth} < n = {n}")

    split = point_split(G, v, t_set, bridge_label)
    conn_ok = vertex_connectivity(split.graph) >= n

    base_matroid = cycle_matroid(G)
    split_matroid = cycle_matroid(split.graph)
    rebuilt = element_split(base_matroid, t_set, bridge_label)
    bridge_ok = split_matroid.equals(rebuilt.result)

    from .theorems import check_cocircuit_condition

    cond_ok, _ = check_cocircuit_condition(base_matroid, t_set)

    return SlaterReport(graph_name=G.name, n=n, vertex=v, t_set=t_set,
                        split_connectivity_ok=conn_ok,
                        bridge_identity_ok=bridge_ok,
                        cocircuit_condition_ok=cond_ok)


def reduce_to_cubic(
        G: SimpleGraph,
        bridge_prefix: str = "a") -> tuple[list[SplitResult], SimpleGraph]:
    """Split high-degree vertices down to a 3-regular 3-connected graph.

    Each step picks the lexicographically smallest vertex of degree > 3
    and its two lexicographically smallest incident edges, so the trace
    is fully deterministic.  3-connectivity is re-verified after every
    step; a failure would contradict the supporting corollary and is
    raised as a theorem violation.
    """
    if vertex_connectivity(G) < 3:
        raise NotThreeConnected(f"{G.name} is not 3-connected")
    steps: list[SplitResult] = []
    current = G
    counter = 1
    while True:
        heavy = sorted(v for v in current.vertices if current.degree(v) > 3)
        if not heavy:
            break
        v = heavy[0]
        t_pair = tuple(sorted(current.incident(v))[:2])
        labels = set(current.edge_labels())
        while f"{bridge_prefix}{counter}" in labels:
            counter += 1
        step = point_split(current, v, t_pair, f"{bridge_prefix}{counter}")
        counter += 1
        if vertex_connectivity(step.graph) < 3:
            raise TheoremViolation(
                f"split at {v!r} lost 3-connectivity; trace length {len(steps)}")
        steps.append(step)
        current = step.graph
    if any(current.degree(v) != 3 for v in current.vertices):
        raise TheoremViolation("reduction ended without 3-regularity")
    return steps, current


def to_dot(G: SimpleGraph) -> str:
    """Graph-description text for external viewers; stable ordering."""
    lines = [f'graph "{G.name}" {{']
    for v in G.vertices:
        lines.append(f'  "{v}";')
    for u, v, lab in G.edges:
        lines.append(f'  "{u}" -- "{v}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
