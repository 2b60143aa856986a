"""Minimal vertex covers, big height, and the cover-theoretic predicates.

Minimal vertex covers of a graph are exactly the generating sets of the
minimal primes of its edge ideal, so the big height of the ideal is the
cardinality of a maximum minimal cover. Enumeration is branch-and-reduce on
an uncovered edge followed by a minimality filter; tests cross-check it
against brute force over all vertex subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from edgeideals.graphs import Graph, cycle_structure, free_neighbors

#: Enumeration aborts beyond this many minimal covers.
COVER_GUARD = 10**6


class CoverError(ValueError):
    """Cover-analysis precondition violation."""


class HypothesisError(CoverError):
    """The hypothesis pattern of a combination lemma does not hold."""


# ---------------------------------------------------------------------------
# basic predicates


def is_vertex_cover(G: Graph, s: frozenset[str] | set[str]) -> bool:
    return all(u in s or v in s for u, v in G.edges)


def is_minimal_cover(G: Graph, s: frozenset[str] | set[str]) -> bool:
    """A cover is minimal iff every member has a neighbour outside the cover."""
    if not is_vertex_cover(G, s):
        return False
    for y in s:
        if not any(z not in s for z in G.neighbors(y)):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def minimal_covers(G: Graph, guard: int = COVER_GUARD) -> list[frozenset[str]]:
    """All minimal vertex covers, duplicate-free, sorted. Empty graph -> [set()]."""
    edges = G.sorted_edges()
    results: set[frozenset[str]] = set()
    seen: set[frozenset[str]] = set()

    def extend(chosen: frozenset[str]) -> None:
        if chosen in seen:
            return
        seen.add(chosen)
        for u, v in edges:
            if u not in chosen and v not in chosen:
                extend(chosen | {u})
                extend(chosen | {v})
                return
        # every edge covered: keep if minimal
        if is_minimal_cover(G, chosen):
            results.add(chosen)
            if len(results) > guard:
                raise CoverError(f"more than {guard} minimal covers; aborted")

    extend(frozenset())
    return sorted(results, key=lambda c: tuple(sorted(c)))


def maximum_minimal_covers(G: Graph) -> list[frozenset[str]]:
    covers = minimal_covers(G)
    top = max(len(c) for c in covers)
    return [c for c in covers if len(c) == top]


def height(G: Graph) -> int:
    return min(len(c) for c in minimal_covers(G))


def big_height(G: Graph) -> int:
    """Maximum cardinality of a minimal vertex cover (0 for the empty graph)."""
    return max(len(c) for c in minimal_covers(G))


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class VertexCover:
    """A vertex cover tied to the graph it covers.

    Ops reject covers presented against a different graph, so a cover cannot
    silently be reused across transformations.
    """

    vertices: frozenset[str]
    graph: Graph

    def __post_init__(self) -> None:
        unknown = self.vertices - set(self.graph.vertices)
        if unknown:
            raise CoverError(f"cover contains unknown vertices {sorted(unknown)}")
        if not is_vertex_cover(self.graph, self.vertices):
            raise CoverError("vertex set does not cover every edge")

    @property
    def is_minimal(self) -> bool:
        return is_minimal_cover(self.graph, self.vertices)

    @property
    def is_maximum(self) -> bool:
        return self.is_minimal and len(self.vertices) == big_height(self.graph)

    def sorted(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))


def enumerate_minimal_covers(G: Graph, guard: int = COVER_GUARD) -> list[VertexCover]:
    return [VertexCover(c, G) for c in minimal_covers(G, guard=guard)]


@dataclass(frozen=True)
class CoverSummary:
    height: int
    big_height: int
    count: int
    maximum_covers: tuple[tuple[str, ...], ...]

    @staticmethod
    def from_graph(G: Graph) -> "CoverSummary":
        covers = minimal_covers(G)
        sizes = [len(c) for c in covers]
        top = max(sizes)
        maxima = tuple(
            sorted(tuple(sorted(c)) for c in covers if len(c) == top)
        )
        return CoverSummary(min(sizes), top, len(covers), maxima)

    def to_json_dict(self) -> dict:
        return {
            "height": self.height,
            "big_height": self.big_height,
            "n_min_covers": self.count,
            "maximum_covers": [list(c) for c in self.maximum_covers],
        }


# ---------------------------------------------------------------------------
# induced covers


def _check_same_graph(C: VertexCover, G: Graph) -> None:
    if C.graph != G:
        raise CoverError("cover belongs to a different graph")


def induced_cover(C: VertexCover, H: Graph) -> frozenset[str]:
    """The (possibly empty) trace of a cover on a subgraph: C ∩ V(H)."""
    if not H.edges.issubset(C.graph.edges) or not set(H.vertices).issubset(C.graph.vertices):
        raise CoverError("second argument is not a subgraph of the cover's graph")
    return C.vertices & set(H.vertices)


@dataclass(frozen=True)
class InducedMinimality:
    removed_x: bool
    cover: frozenset[str]

    @property
    def label(self) -> str:
        return "minimal_after_removing_x" if self.removed_x else "minimal"


def _edge_difference(G: Graph, H: Graph) -> Graph:
    """G with H's edges removed, restricted to vertices still incident."""
    rest = G.edges - H.edges
    return Graph.from_edges(rest)


def check_induced_minimality(
    G: Graph, H: Graph, x: str, C: VertexCover
) -> InducedMinimality:
    """Decide which of D = C ∩ V(H) and D \\ {x} is a minimal cover of H.

    Requires V(H) ∩ V(G \\ H) = {x} (an articulation pattern) and C minimal
    on G. When x is not in C the induced cover itself is always minimal; the
    report is re-verified with a direct minimality test either way.
    """
    _check_same_graph(C, G)
    if not H.edges.issubset(G.edges):
        raise CoverError("H is not a subgraph of G")
    if not C.is_minimal:
        raise CoverError("cover is not minimal")
    rest = _edge_difference(G, H)
    shared = set(H.vertices) & set(rest.vertices)
    if shared != {x}:
        raise CoverError(
            f"V(H) ∩ V(G\\H) = {sorted(shared)}, expected exactly {{{x!r}}}"
        )
    D = induced_cover(C, H)
    if x not in C.vertices or is_minimal_cover(H, D):
        if not is_minimal_cover(H, D):
            raise CoverError("induced cover unexpectedly non-minimal")
        return InducedMinimality(removed_x=False, cover=D)
    reduced = D - {x}
    if not is_minimal_cover(H, reduced):
        raise CoverError("neither D nor D\\{x} is minimal; precondition violated")
    return InducedMinimality(removed_x=True, cover=reduced)


# ---------------------------------------------------------------------------
# redundant neighbours


def redundant_neighbors(G: Graph, C: VertexCover, x: str) -> frozenset[str]:
    """Neighbours y of x with y and all of N(y) \\ {x} inside the cover.

    Only defined for minimal covers avoiding x. Removing a redundant y gives
    a minimal cover of the graph with the edge xy deleted.
    """
    _check_same_graph(C, G)
    if x not in G:
        raise CoverError(f"unknown vertex {x!r}")
    if x in C.vertices:
        raise CoverError(f"{x!r} belongs to the cover")
    if not C.is_minimal:
        raise CoverError("cover is not minimal")
    out = set()
    for y in G.neighbors(x):
        if y in C.vertices and (G.neighbors(y) - {x}).issubset(C.vertices):
            out.add(y)
    return frozenset(out)


def vertex_in_all_maximum_covers(G: Graph, x: str) -> bool:
    if x not in G:
        raise CoverError(f"unknown vertex {x!r}")
    return all(x in c for c in maximum_minimal_covers(G))


# ---------------------------------------------------------------------------
# five-case classification


@dataclass(frozen=True)
class Lemma3Outcome:
    """Result of the five-case edge-removal classification at a vertex.

    ``case`` is one of a, b, c, d, e, or not_applicable; the witness is the
    removed neighbour (free for a/b, non-free for c/d/e); ``companion`` is
    the second non-free neighbour for c/d/e; ``subgraphs`` holds the
    component pair (H, K) for cases b and e.
    """

    case: str
    witness_neighbor: str | None = None
    companion: str | None = None
    subgraphs: tuple[Graph, Graph] | None = None
    reason: str | None = None


def _component_split(G: Graph, y: str) -> tuple[Graph, Graph]:
    """(component of y, rest) as vertex-disjoint induced subgraphs."""
    hv = G.component_vertices(y)
    H = G.induced(hv)
    K = G.induced(set(G.vertices) - hv)
    return H, K


def classify_lemma3(G: Graph, x: str) -> Lemma3Outcome:
    """Pick a redundant neighbour of ``x`` whose removal satisfies one of the
    five cover-theoretic conditions, each re-checked by direct enumeration.

    Preconditions (reported as not_applicable when violated): the cycles of G
    are pairwise disjoint, some maximum minimal cover avoids x, and every
    minimal cover avoiding x has a redundant neighbour of x. Checking order
    is a deterministic tie-break: free witnesses first (a then b), then
    non-free (c, d, e), scanning candidates in label order.
    """
    if x not in G:
        raise CoverError(f"unknown vertex {x!r}")
    if not cycle_structure(G).pairwise_disjoint:
        return Lemma3Outcome("not_applicable", reason="cycles are not pairwise disjoint")
    covers = minimal_covers(G)
    bh = max(len(c) for c in covers)
    avoiding = [c for c in covers if x not in c]
    max_avoiding = [c for c in avoiding if len(c) == bh]
    if not max_avoiding:
        return Lemma3Outcome("not_applicable", reason="every maximum minimal cover contains x")
    red_by_cover = {
        c: redundant_neighbors(G, VertexCover(c, G), x) for c in avoiding
    }
    if any(not r for r in red_by_cover.values()):
        return Lemma3Outcome(
            "not_applicable",
            reason="some minimal cover avoiding x has no redundant neighbour",
        )

    free = free_neighbors(G, x)
    free_cands = sorted({y for c in max_avoiding for y in red_by_cover[c] if y in free})
    nonfree_cands = sorted({y for c in max_avoiding for y in red_by_cover[c] if y not in free})

    for y in free_cands:
        gbar = G.without_edges([(x, y)])
        if big_height(gbar) == bh - 1:
            return Lemma3Outcome("a", witness_neighbor=y)
    for y in free_cands:
        gbar = G.without_edges([(x, y)])
        H, K = _component_split(gbar, y)
        if K.edges and x in K.vertices and vertex_in_all_maximum_covers(K, x):
            return Lemma3Outcome("b", witness_neighbor=y, subgraphs=(H, K))

    all_nonfree = sorted(G.neighbors(x) - free)
    for z1 in nonfree_cands:
        gbar = G.without_edges([(x, z1)])
        if big_height(gbar) == bh - 1:
            others = [z for z in all_nonfree if z != z1]
            z2 = others[0] if len(others) == 1 else None
            return Lemma3Outcome("c", witness_neighbor=z1, companion=z2)
    for z1 in nonfree_cands:
        others = [z for z in all_nonfree if z != z1]
        if len(others) != 1:
            continue  # needs exactly two non-free neighbours
        z2 = others[0]
        gtilde = G.without_edges([(x, z1), (x, z2)])
        if big_height(gtilde) == bh - 1:
            return Lemma3Outcome("d", witness_neighbor=z1, companion=z2)
    for z1 in nonfree_cands:
        others = [z for z in all_nonfree if z != z1]
        if len(others) != 1:
            continue
        z2 = others[0]
        gtilde = G.without_edges([(x, z1), (x, z2)])
        H, K = _component_split(gtilde, z1)
        if K.edges and x in K.vertices and vertex_in_all_maximum_covers(K, x):
            return Lemma3Outcome("e", witness_neighbor=z1, companion=z2, subgraphs=(H, K))
    return Lemma3Outcome("not_applicable", reason="no case verified (unexpected)")


# ---------------------------------------------------------------------------
# cover unions


def _connecting_edge(G: Graph, H1: Graph, H2: Graph):
    """The unique edge of G joining vertex-disjoint H1 and H2, if the pattern
    G = H1 + {x1x2} + H2 holds; otherwise None."""
    if set(H1.vertices) & set(H2.vertices):
        return None
    extra = G.edges - H1.edges - H2.edges
    if len(extra) != 1:
        return None
    (e,) = extra
    u, v = e
    if u in H1.vertices and v in H2.vertices:
        return u, v
    if v in H1.vertices and u in H2.vertices:
        return v, u
    return None


def union_cover_maximality(
    G: Graph,
    H1: Graph,
    H2: Graph,
    D1: frozenset[str] | set[str],
    D2: frozenset[str] | set[str],
) -> VertexCover:
    """Combine maximum minimal covers of two parts into one of the whole.

    Two hypothesis patterns are accepted and verified internally: the parts
    share exactly one vertex that lies in all maximum minimal covers of both,
    or the parts are connected through an edge and one of the two sufficient
    conditions at its endpoints holds. The returned union is re-verified to
    be a maximum minimal cover of G by enumeration.
    """
    D1, D2 = frozenset(D1), frozenset(D2)
    for H, D in ((H1, D1), (H2, D2)):
        if not H.edges.issubset(G.edges):
            raise HypothesisError("parts are not subgraphs of G")
        if not is_minimal_cover(H, D) or len(D) != big_height(H):
            raise HypothesisError("given cover is not a maximum minimal cover of its part")

    shared = set(H1.vertices) & set(H2.vertices)
    if len(shared) == 1 and G.edges == H1.edges | H2.edges:
        (x,) = shared
        if not (vertex_in_all_maximum_covers(H1, x) and vertex_in_all_maximum_covers(H2, x)):
            raise HypothesisError(
                f"shared vertex {x!r} misses some maximum minimal cover of a part"
            )
    else:
        conn = _connecting_edge(G, H1, H2)
        if conn is None:
            raise HypothesisError("parts are not connected through a single edge")
        x1, x2 = conn
        cond_ii = vertex_in_all_maximum_covers(H1, x1) or vertex_in_all_maximum_covers(H2, x2)
        cond_i = False
        if not cond_ii:
            h1p = H1.with_edges([(x1, x2)])
            h2p = H2.with_edges([(x1, x2)])
            cond_i = (
                (x1 in D1 or x2 in D2)
                and not any(x1 in c for c in maximum_minimal_covers(h1p))
                and not any(x2 in c for c in maximum_minimal_covers(h2p))
            )
        if not (cond_i or cond_ii):
            raise HypothesisError("neither endpoint condition holds")

    union = D1 | D2
    if not is_minimal_cover(G, union) or len(union) != big_height(G):
        raise HypothesisError("union failed the enumeration re-check")
    return VertexCover(union, G)
