"""Finite simple graphs and the structural operations of the certificate pipeline.

Graphs are immutable values: every transformation returns a new graph (plus
any fresh labels it introduced), which keeps recursion traces auditable.
Vertex labels are opaque strings; labels created internally use the reserved
prefixes ``_w`` (whisker), ``_g`` (gluing) and ``_s`` (splitting) so they
cannot collide with user labels.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

Edge = tuple[str, str]

#: DFS cycle enumeration aborts beyond this many cycles (adversarial inputs).
CYCLE_GUARD = 10_000


class GraphError(ValueError):
    """Invalid graph construction or operation precondition."""


class GraphParseError(GraphError):
    """Malformed edge-list input."""


def make_edge(u: str, v: str) -> Edge:
    """Normalize an unordered vertex pair; loops are rejected."""
    if u == v:
        raise GraphError(f"loop edge {u!r}-{v!r} not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: sorted vertex labels plus unordered edges.

    Isolated vertices are permitted (they appear naturally after edge
    removals). The empty graph is allowed; its edge ideal is (0) by
    convention.
    """

    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        if len(self.vertices) != len(vs):
            raise GraphError("duplicate vertex labels")
        if tuple(sorted(self.vertices)) != self.vertices:
            raise GraphError("vertex tuple must be sorted")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop edge at {u!r}")
            if u > v:
                raise GraphError(f"edge {(u, v)!r} not normalized")
            if u not in vs or v not in vs:
                raise GraphError(f"edge {(u, v)!r} has endpoint outside vertex set")

    @staticmethod
    def from_edges(edges: Iterable[tuple[str, str]], isolated: Iterable[str] = ()) -> "Graph":
        norm = frozenset(make_edge(u, v) for u, v in edges)
        verts = set(isolated)
        for u, v in norm:
            verts.add(u)
            verts.add(v)
        return Graph(tuple(sorted(verts)), norm)

    @staticmethod
    def empty() -> "Graph":
        return Graph((), frozenset())

    # -- basic queries ----------------------------------------------------

    def __contains__(self, x: str) -> bool:
        return x in self.vertices

    def has_edge(self, u: str, v: str) -> bool:
        return make_edge(u, v) in self.edges

    def neighbors(self, x: str) -> frozenset[str]:
        if x not in self:
            raise GraphError(f"unknown vertex {x!r}")
        return frozenset(v if u == x else u for u, v in self.edges if x in (u, v))

    def degree(self, x: str) -> int:
        return len(self.neighbors(x))

    def leaves(self) -> frozenset[str]:
        """Vertices of degree exactly one (terminal vertices)."""
        return frozenset(x for x in self.vertices if self.degree(x) == 1)

    def is_terminal_edge(self, u: str, v: str) -> bool:
        if not self.has_edge(u, v):
            raise GraphError(f"{u!r}-{v!r} is not an edge")
        return self.degree(u) == 1 or self.degree(v) == 1

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # -- derived graphs ---------------------------------------------------

    def without_edges(self, edges: Iterable[tuple[str, str]]) -> "Graph":
        """Remove edges, keeping all vertices (possibly now isolated)."""
        gone = {make_edge(u, v) for u, v in edges}
        missing = gone - self.edges
        if missing:
            raise GraphError(f"cannot remove non-edges {sorted(missing)}")
        return Graph(self.vertices, self.edges - gone)

    def with_edges(self, edges: Iterable[tuple[str, str]]) -> "Graph":
        new = frozenset(make_edge(u, v) for u, v in edges)
        verts = set(self.vertices)
        for u, v in new:
            verts.add(u)
            verts.add(v)
        return Graph(tuple(sorted(verts)), self.edges | new)

    def without_vertices(self, xs: Iterable[str]) -> "Graph":
        gone = set(xs)
        verts = tuple(v for v in self.vertices if v not in gone)
        edges = frozenset(e for e in self.edges if gone.isdisjoint(e))
        return Graph(verts, edges)

    def induced(self, xs: Iterable[str]) -> "Graph":
        keep = set(xs)
        unknown = keep - set(self.vertices)
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        edges = frozenset(e for e in self.edges if keep.issuperset(e))
        return Graph(tuple(sorted(keep)), edges)

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        f = lambda x: mapping.get(x, x)
        return Graph.from_edges(
            ((f(u), f(v)) for u, v in self.edges),
            isolated=(f(x) for x in self.vertices if self.degree(x) == 0),
        )

    # -- connectivity -----------------------------------------------------

    def component_vertices(self, x: str) -> frozenset[str]:
        """Vertex set of the connected component containing ``x``."""
        if x not in self:
            raise GraphError(f"unknown vertex {x!r}")
        seen = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def components(self) -> list["Graph"]:
        """Connected components, isolated vertices included, sorted by label."""
        remaining = set(self.vertices)
        comps = []
        for x in self.vertices:
            if x in remaining:
                cv = self.component_vertices(x)
                remaining -= cv
                comps.append(self.induced(cv))
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) <= 1 or len(self.components()) == 1

    def fresh_label(self, prefix: str) -> str:
        used = set(self.vertices)
        for i in itertools.count():
            cand = f"{prefix}{i}"
            if cand not in used:
                return cand
        raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# parsing


_LABEL_RE = re.compile(r"^[^\s#]+$")


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as two whitespace-separated labels; ``#`` starts a
    comment; blank lines are ignored; ``vertex <label>`` declares an isolated
    vertex. Duplicate edge lines collapse to a single edge.
    """
    edges: list[Edge] = []
    isolated: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2 or not _LABEL_RE.match(parts[1]):
                raise GraphParseError(f"line {lineno}: expected 'vertex <label>'")
            isolated.append(parts[1])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two labels, got {len(parts)}")
        u, v = parts
        if u == v:
            raise GraphParseError(f"line {lineno}: loop edge {u!r} {v!r}")
        edges.append(make_edge(u, v))
    return Graph.from_edges(edges, isolated=isolated)


def format_graph(G: Graph) -> str:
    """Inverse of :func:`parse_graph` (canonical, sorted)."""
    lines = [f"{u} {v}" for u, v in G.sorted_edges()]
    lines += [f"vertex {x}" for x in G.vertices if G.degree(x) == 0]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# cycles


@dataclass(frozen=True)
class CycleStructure:
    """All simple cycles of a graph plus the disjointness flag and cycle rank.

    ``cycle_rank`` is e - |V| + k (k = number of connected components); when
    the cycles are pairwise vertex-disjoint it equals ``len(cycles)``.
    """

    cycles: tuple[tuple[str, ...], ...]
    pairwise_disjoint: bool
    cycle_rank: int


def simple_cycles(G: Graph, guard: int = CYCLE_GUARD) -> list[tuple[str, ...]]:
    """Enumerate every simple cycle (length >= 3), each exactly once.

    Cycles are returned in canonical form: starting at their smallest vertex,
    oriented so the second vertex is smaller than the last. DFS restricted to
    vertices larger than the start kills rotations; the orientation rule
    kills reflections.
    """
    adj = {x: sorted(G.neighbors(x)) for x in G.vertices}
    cycles: list[tuple[str, ...]] = []

    def dfs(start: str, path: list[str], on_path: set[str]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(tuple(path))
                if len(cycles) > guard:
                    raise GraphError(f"more than {guard} cycles; enumeration aborted")
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                dfs(start, path, on_path)
                on_path.remove(w)
                path.pop()

    for s in G.vertices:
        dfs(s, [s], {s})
    cycles.sort()
    return cycles


def cycle_structure(G: Graph, guard: int = CYCLE_GUARD) -> CycleStructure:
    """Enumerate cycles, test pairwise vertex-disjointness, compute the rank."""
    cycles = simple_cycles(G, guard=guard)
    disjoint = True
    for c1, c2 in itertools.combinations(cycles, 2):
        if not set(c1).isdisjoint(c2):
            disjoint = False
            break
    rank = len(G.edges) - len(G.vertices) + len(G.components())
    return CycleStructure(tuple(cycles), disjoint, rank)


def has_pairwise_disjoint_cycles(G: Graph) -> bool:
    return cycle_structure(G).pairwise_disjoint


def cycle_edges(cycle: tuple[str, ...]) -> frozenset[Edge]:
    n = len(cycle)
    return frozenset(make_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def edges_on_cycles(G: Graph, cycles: Iterable[tuple[str, ...]] | None = None) -> frozenset[Edge]:
    if cycles is None:
        cycles = simple_cycles(G)
    out: set[Edge] = set()
    for c in cycles:
        out |= cycle_edges(c)
    return frozenset(out)


@dataclass(frozen=True)
class EdgeRole:
    """An edge tagged as terminal (one endpoint of degree 1) and/or on a cycle."""

    edge: Edge
    is_terminal: bool
    on_cycle: bool


def edge_roles(G: Graph) -> list[EdgeRole]:
    on_cyc = edges_on_cycles(G)
    return [
        EdgeRole(e, G.is_terminal_edge(*e), e in on_cyc)
        for e in G.sorted_edges()
    ]


# ---------------------------------------------------------------------------
# component classification / whiskers


class ComponentClass(Enum):
    STAR = "Star"
    CYCLE = "Cycle"
    WHISKER_ON_CYCLE = "WhiskerOnCycle"
    OTHER = "Other"


def classify_component(G: Graph, component: Graph) -> ComponentClass:
    """Classify one connected component as star, cycle, or whiskered cycle.

    ``Other`` covers everything else, in particular any component with an
    edge that is neither terminal nor on a cycle.
    """
    if not component.edges.issubset(G.edges) or not set(component.vertices).issubset(G.vertices):
        raise GraphError("second argument is not a subgraph of the first")
    if not component.is_connected():
        raise GraphError("second argument is not connected")
    if component.vertices and component.component_vertices(component.vertices[0]) != set(
        G.component_vertices(component.vertices[0])
    ):
        raise GraphError("second argument is not a full connected component")
    if not component.edges:
        return ComponentClass.OTHER
    common = set.intersection(*(set(e) for e in component.edges))
    if common:
        return ComponentClass.STAR
    cycles = simple_cycles(component)
    if len(cycles) != 1:
        return ComponentClass.OTHER
    ce = cycle_edges(cycles[0])
    if component.edges == ce:
        return ComponentClass.CYCLE
    cyc_verts = set(cycles[0])
    for e in component.edges - ce:
        if not component.is_terminal_edge(*e):
            return ComponentClass.OTHER
        if not cyc_verts.intersection(e):
            return ComponentClass.OTHER
    return ComponentClass.WHISKER_ON_CYCLE


def is_fully_whiskered(G: Graph) -> bool:
    """True iff G is a whisker graph over its non-leaf core with a whisker
    at every core vertex.

    Equivalently: G has at least one edge and every vertex of degree != 1
    has a neighbour of degree 1. A lone edge counts (a star is a whisker
    graph on an isolated vertex); isolated vertices disqualify the graph.
    """
    if not G.edges:
        return False
    for x in G.vertices:
        if G.degree(x) == 1:
            continue
        if not any(G.degree(y) == 1 for y in G.neighbors(x)):
            return False
    return True


# ---------------------------------------------------------------------------
# transformations


def add_whisker(G: Graph, x: str) -> tuple[Graph, str]:
    """Attach a pendant edge at ``x``; returns the new graph and leaf label."""
    if x not in G:
        raise GraphError(f"unknown vertex {x!r}")
    y = G.fresh_label("_w")
    return G.with_edges([(x, y)]), y


def glue_leaves(G: Graph, x1: str, x2: str) -> tuple[Graph, str]:
    """Identify two leaves belonging to disjoint terminal edges.

    Returns the glued graph and the fresh label of the merged vertex, which
    is adjacent to both former neighbours.
    """
    if x1 == x2:
        raise GraphError("cannot glue a leaf with itself")
    for x in (x1, x2):
        if x not in G:
            raise GraphError(f"unknown vertex {x!r}")
        if G.degree(x) != 1:
            raise GraphError(f"{x!r} is not a leaf")
    (y1,) = G.neighbors(x1)
    (y2,) = G.neighbors(x2)
    if len({x1, y1, x2, y2}) != 4:
        raise GraphError("leaf edges are not disjoint")
    x = G.fresh_label("_g")
    glued = G.without_vertices([x1, x2]).with_edges([(x, y1), (x, y2)])
    return glued, x


def split_degree2_cycle_vertex(G: Graph, x: str) -> tuple[Graph, str, str]:
    """Open the cycle through a degree-2 vertex ``x``.

    The edges x-y1 and x-y2 are replaced by x1-y1 and x2-y2 with fresh
    terminal vertices x1, x2; ``glue_leaves`` on (x1, x2) reconstructs a
    graph isomorphic to the input, and the number of cycles drops by one.
    """
    if x not in G:
        raise GraphError(f"unknown vertex {x!r}")
    if G.degree(x) != 2:
        raise GraphError(f"{x!r} has degree {G.degree(x)}, need exactly 2")
    if not any(x in c for c in simple_cycles(G)):
        raise GraphError(f"{x!r} does not lie on a cycle")
    y1, y2 = sorted(G.neighbors(x))
    x1 = G.fresh_label("_s")
    x2 = G.with_edges([(x1, y1)]).fresh_label("_s")
    L = G.without_vertices([x]).with_edges([(x1, y1), (x2, y2)])
    return L, x1, x2


def decompose_at_edge(G: Graph, a: str, x: str) -> tuple[Graph, Graph]:
    """Split at an edge that is neither terminal nor on a cycle.

    Returns (G1, G2): G1 is the connected component of ``a`` after removing
    the edge; G2 is the rest. The parts are vertex-disjoint, both contain at
    least one edge, and G = G1 + {ax} + G2.
    """
    if not G.has_edge(a, x):
        raise GraphError(f"{a!r}-{x!r} is not an edge")
    if G.is_terminal_edge(a, x):
        raise GraphError(f"{a!r}-{x!r} is terminal")
    if make_edge(a, x) in edges_on_cycles(G):
        raise GraphError(f"{a!r}-{x!r} lies on a cycle")
    rest = G.without_edges([(a, x)])
    side_a = rest.component_vertices(a)
    G1 = rest.induced(side_a)
    G2 = rest.induced(set(rest.vertices) - side_a)
    return G1, G2


def free_neighbors(G: Graph, x: str) -> frozenset[str]:
    """Neighbours of ``x`` lying on no cycle through ``x``."""
    nbrs = G.neighbors(x)
    non_free: set[str] = set()
    for c in simple_cycles(G):
        if x in c:
            non_free |= nbrs.intersection(c)
    return nbrs - non_free
