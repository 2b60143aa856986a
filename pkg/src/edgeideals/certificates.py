"""Generator certificates: few polynomials whose radical is the edge ideal.

The target bound is big_height(G) + n where n is the number of (pairwise
vertex-disjoint) cycles. Certificates come from staircase arrangements of
the edge monomials: rows P_0, ..., P_r with |P_0| = 1 such that any two
distinct monomials in a later row have an earlier monomial dividing their
product; the row sums then generate the edge ideal up to radical. When no
arrangement with few enough rows exists directly, a degree-2 cycle vertex is
split into two pendant vertices (one cycle fewer, big height grows by at
most one), the smaller problem is solved recursively, and the split labels
are substituted back. Combination steps used for graphs glued along an edge
are exposed as standalone operations; every certificate can be re-verified
independently with the Groebner oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from edgeideals.covers import big_height
from edgeideals.graphs import (
    Graph,
    GraphError,
    cycle_structure,
    free_neighbors,
    make_edge,
    simple_cycles,
    split_degree2_cycle_vertex,
)
from edgeideals.groebner import (
    DEFAULT_MAX_STEPS,
    VerificationResult,
    verify_radical_equals_edge_ideal,
)
from edgeideals.polynomials import Polynomial

#: Node budget for one arrangement search.
SV_NODE_BUDGET = 10**6

Monomial = tuple[str, ...]  # sorted variable labels, squarefree


class ConstructionError(ValueError):
    """Certificate construction failed or a precondition does not hold."""


class DisjointnessError(ConstructionError):
    """The input graph has two cycles sharing a vertex."""


class SearchBudgetError(ConstructionError):
    """The arrangement search ran out of nodes before finishing."""


def _mono(labels: Iterable[str]) -> Monomial:
    return tuple(sorted(set(labels)))


def _mono_poly(m: Monomial) -> Polynomial:
    return Polynomial.monomial(m)


def _gen_poly(gen: Sequence[Monomial]) -> Polynomial:
    out = Polynomial.zero()
    for m in gen:
        out = out + _mono_poly(m)
    return out


# ---------------------------------------------------------------------------
# staircase arrangements


@dataclass(frozen=True)
class SVArrangement:
    """Rows of squarefree monomials; row ℓ's sum is the ℓ-th generator."""

    rows: tuple[tuple[Monomial, ...], ...]

    def monomials(self) -> list[Monomial]:
        return [m for row in self.rows for m in row]

    def row_sums(self) -> list[Polynomial]:
        return [_gen_poly(row) for row in self.rows]


def sv_check(rows: Sequence[Sequence[Monomial]]) -> bool:
    """Validate the arrangement condition.

    The first row is a singleton, rows are nonempty, monomials are pairwise
    distinct, and for every later row each pair of distinct members has a
    monomial in an earlier row dividing their product.
    """
    if not rows or any(not row for row in rows):
        return False
    if len(rows[0]) != 1:
        return False
    flat = [m for row in rows for m in row]
    if len(set(flat)) != len(flat):
        return False
    supp = {m: frozenset(m) for m in flat}
    earlier: list[frozenset[str]] = []
    for i, row in enumerate(rows):
        if i:
            for p, q in itertools.combinations(row, 2):
                prod = supp[p] | supp[q]
                if not any(e <= prod for e in earlier):
                    return False
        earlier.extend(supp[m] for m in row)
    return True


def sv_search(
    monomials: Iterable[Monomial],
    rows_target: int,
    budget: int = SV_NODE_BUDGET,
) -> SVArrangement | None:
    """Search for an arrangement of the given monomials in exactly
    ``rows_target`` rows.

    Deterministic: monomials are scanned in sorted order and larger rows are
    tried first, so the same input always yields the same arrangement.
    Returns None when the exhaustive search proves there is no arrangement;
    raises SearchBudgetError when the node budget runs out first.
    """
    monos = sorted(set(_mono(m) for m in monomials))
    if any(not m for m in monos):
        raise ConstructionError("constant monomial in arrangement input")
    if not monos:
        return SVArrangement(()) if rows_target == 0 else None
    k = len(monos)
    if rows_target < 1 or rows_target > k:
        return None
    supp = [frozenset(m) for m in monos]
    # div[i][j]: bitmask of candidate dividers of monos[i] * monos[j]; a pair
    # may share a row iff one of its dividers sits in a strictly earlier row
    div = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            prod = supp[i] | supp[j]
            mask = 0
            for r in range(k):
                if r != i and r != j and supp[r] <= prod:
                    mask |= 1 << r
            div[i][j] = div[j][i] = mask

    nodes = [budget]

    def spend() -> None:
        nodes[0] -= 1
        if nodes[0] < 0:
            raise SearchBudgetError(f"arrangement search exceeded {budget} nodes")

    full = (1 << k) - 1
    built: list[int] = []  # row bitmasks, in order
    # the earlier-row set seen by future rows is exactly the placed set, so a
    # state is (remaining, rows_used); dead states are cached
    failed: set[tuple[int, int]] = set()

    def place(remaining: int, rows_used: int) -> bool:
        rows_left = rows_target - rows_used
        if not remaining:
            return rows_left == 0
        if rows_left == 0 or remaining.bit_count() < rows_left:
            return False
        key = (remaining, rows_used)
        if key in failed:
            return False
        spend()
        placed = full & ~remaining
        idxs = [i for i in range(k) if remaining >> i & 1]
        row: list[int] = []

        def choose(pos: int) -> bool:
            spend()
            if pos == len(idxs):
                if not row:
                    return False
                rowmask = 0
                for i in row:
                    rowmask |= 1 << i
                built.append(rowmask)
                if place(remaining & ~rowmask, rows_used + 1):
                    return True
                built.pop()
                return False
            i = idxs[pos]
            if all(div[i][p] & placed for p in row):
                row.append(i)
                if choose(pos + 1):
                    return True
                row.pop()
            return choose(pos + 1)

        if choose(0):
            return True
        failed.add(key)
        return False

    if place(full, 0):
        return SVArrangement(
            tuple(
                tuple(monos[i] for i in range(k) if mask >> i & 1)
                for mask in built
            )
        )
    return None


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class GeneratorCertificate:
    """A claimed generator list for the radical of a graph's edge ideal.

    ``generators`` are sums of squarefree monomials, each monomial a sorted
    label tuple; ``bound`` is the claimed ceiling big_height + n on the
    number of generators. The certificate carries everything needed to
    re-verify it from scratch.
    """

    graph: Graph
    bound: int
    generators: tuple[tuple[Monomial, ...], ...]
    trace: tuple[str, ...] = ()

    def polynomials(self) -> list[Polynomial]:
        return [_gen_poly(g) for g in self.generators]

    def within_bound(self) -> bool:
        return len(self.generators) <= self.bound

    def verify(self, max_steps: int = DEFAULT_MAX_STEPS) -> VerificationResult:
        if not self.within_bound():
            return VerificationResult(
                False,
                reason=f"{len(self.generators)} generators exceed the bound {self.bound}",
            )
        return verify_radical_equals_edge_ideal(
            self.polynomials(), self.graph, max_steps=max_steps
        )

    def to_json_dict(self) -> dict:
        return {
            "graph": [list(e) for e in self.graph.sorted_edges()],
            "bound": self.bound,
            "generators": [[list(m) for m in g] for g in self.generators],
            "trace": list(self.trace),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "GeneratorCertificate":
        try:
            G = Graph.from_edges((u, v) for u, v in d["graph"])
            gens = tuple(
                tuple(_mono(m) for m in g) for g in d["generators"]
            )
            return GeneratorCertificate(G, int(d["bound"]), gens, tuple(d.get("trace", ())))
        except (KeyError, TypeError, ValueError, GraphError) as exc:
            raise ConstructionError(f"malformed certificate: {exc}") from exc


def _edge_monomials(G: Graph) -> list[Monomial]:
    return [m for m in (tuple(e) for e in G.sorted_edges())]


def base_case_certificate(
    G: Graph, budget: int = SV_NODE_BUDGET
) -> GeneratorCertificate:
    """Arrangement certificate with exactly big_height(G) generators.

    Intended for graphs without cycles (after splitting), where the bound
    carries no cycle allowance; raises when no such arrangement exists.
    """
    if not G.edges:
        return GeneratorCertificate(G, 0, (), ("empty",))
    b = big_height(G)
    arr = sv_search(_edge_monomials(G), b, budget=budget)
    if arr is None:
        raise ConstructionError(f"no arrangement with {b} rows exists")
    return GeneratorCertificate(G, b, arr.rows, (f"sv rows={b}",))


def substitute_glue(
    generators: Sequence[Sequence[Monomial]], x1: str, x2: str, x: str
) -> tuple[tuple[Monomial, ...], ...]:
    """Substitute the merged label ``x`` for both split labels in every
    monomial; duplicate monomials inside one sum collapse (a positive
    integer multiple spans the same ideal)."""
    out = []
    for gen in generators:
        seen: list[Monomial] = []
        for m in gen:
            m2 = _mono(x if v in (x1, x2) else v for v in m)
            if m2 not in seen:
                seen.append(m2)
        out.append(tuple(seen))
    return tuple(out)


def reduce_degree2(G: Graph) -> tuple[Graph, str, str, str]:
    """Open a cycle at its lexicographically least degree-2 vertex.

    Returns (L, x, x1, x2): the split graph plus the removed vertex and the
    two fresh pendant labels; substituting x for x1, x2 undoes the step.
    """
    cands = sorted(
        v for c in simple_cycles(G) for v in c if G.degree(v) == 2
    )
    if not cands:
        raise ConstructionError("no degree-2 cycle vertex to split")
    x = cands[0]
    L, x1, x2 = split_degree2_cycle_vertex(G, x)
    return L, x, x1, x2


#: Node allowance for the optional hunt for fewer-than-bound rows.
_TIGHT_SEARCH_BUDGET = 20_000


def _construct_component(
    comp: Graph, budget: int, trace: list[str]
) -> list[tuple[Monomial, ...]]:
    """Generators for one connected component, at most bight + n of them.

    Feasibility is monotone in the row count (a valid row stays valid when
    split in two), so only the full target bight + n needs a serious search;
    smaller targets get a token budget as an optimization. With no more
    edges than the target, singleton rows settle it outright.
    """
    if not comp.edges:
        return []
    b = big_height(comp)
    ncyc = len(simple_cycles(comp))
    monos = _edge_monomials(comp)
    target = b + ncyc
    if len(monos) <= target:
        trace.append(f"singleton rows={len(monos)}")
        return [(m,) for m in monos]
    for t in range(b, target):
        try:
            arr = sv_search(monos, t, budget=min(budget, _TIGHT_SEARCH_BUDGET))
        except SearchBudgetError:
            break
        if arr is not None:
            trace.append(f"sv rows={t}")
            return list(arr.rows)
    budget_hit = False
    try:
        arr = sv_search(monos, target, budget=budget)
    except SearchBudgetError:
        arr = None
        budget_hit = True
        trace.append(f"sv rows={target} budget-exhausted")
    if arr is not None:
        trace.append(f"sv rows={target}")
        return list(arr.rows)
    if ncyc == 0:
        if budget_hit:
            raise SearchBudgetError(
                "arrangement search for an acyclic component ran out of nodes"
            )
        raise ConstructionError(
            "no arrangement exists for an acyclic component"
        )
    try:
        L, x, x1, x2 = reduce_degree2(comp)
    except ConstructionError:
        raise ConstructionError(
            "no arrangement found and no degree-2 cycle vertex to split"
        ) from None
    trace.append(f"split {x} -> {x1},{x2}")
    gens: list[tuple[Monomial, ...]] = []
    for sub in L.components():
        if sub.edges:
            gens.extend(_construct_component(sub, budget, trace))
    trace.append(f"glue {x1},{x2} -> {x}")
    return list(substitute_glue(gens, x1, x2, x))


def construct_generators(
    G: Graph, budget: int = SV_NODE_BUDGET
) -> GeneratorCertificate:
    """Build a certificate with at most big_height(G) + n generators, where
    n is the number of cycles; requires pairwise vertex-disjoint cycles."""
    cs = cycle_structure(G)
    if not cs.pairwise_disjoint:
        raise DisjointnessError("two cycles share a vertex")
    if not G.edges:
        return GeneratorCertificate(G, 0, (), ("empty",))
    bound = big_height(G) + len(cs.cycles)
    trace: list[str] = []
    gens: list[tuple[Monomial, ...]] = []
    for comp in G.components():
        if comp.edges:
            gens.extend(_construct_component(comp, budget, trace))
    cert = GeneratorCertificate(G, bound, tuple(gens), tuple(trace))
    if not cert.within_bound():
        raise ConstructionError(
            f"construction produced {len(gens)} generators, above the bound {bound}"
        )
    return cert


# ---------------------------------------------------------------------------
# combination steps for graphs glued along an edge


def _require_edge(G: Graph, u: str, v: str, what: str) -> None:
    if not G.has_edge(u, v):
        raise ConstructionError(f"{what}: {u!r}-{v!r} is not an edge")


def combine_case1a(
    G: Graph,
    inner: Sequence[Polynomial],
    x: str,
    y: str,
    a: str,
    w: str | None,
) -> list[Polynomial]:
    """Append xy + aw to generators for G minus the edges xy and aw.

    Preconditions: xy and aw are edges of G, y is a free neighbour of x,
    and the edge ax survives in the remainder (it makes the cross term
    x*y*a*w absorbable: (xy)^2 = xy(xy + aw) - axyw). With w = None only
    the edge xy is removed and the plain monomial xy is appended.
    """
    _require_edge(G, x, y, "removed edge")
    if y not in free_neighbors(G, x):
        raise ConstructionError(f"{y!r} is not a free neighbour of {x!r}")
    removed = [(x, y)]
    if w is not None:
        _require_edge(G, a, w, "removed edge")
        if make_edge(a, w) == make_edge(x, y):
            raise ConstructionError("the two removed edges coincide")
        removed.append((a, w))
    rest = G.without_edges(removed)
    _require_edge(rest, a, x, "connecting edge")
    extra = Polynomial.edge_monomial(x, y)
    if w is not None:
        extra = extra + Polynomial.edge_monomial(a, w)
    return list(inner) + [extra]


def combine_case1d(
    G: Graph,
    inner: Sequence[Polynomial],
    x: str,
    y: str,
    a: str,
    v1: str,
    v2: str,
) -> list[Polynomial]:
    """Append xy + a*v1 and the monomial a*v2 to generators for G minus the
    edges xy, a*v1 and a*v2 (v1, v2 the two distinct non-free neighbours of
    a); requires the connecting edge ax in the remainder."""
    if v1 == v2:
        raise ConstructionError("the two non-free neighbours must differ")
    _require_edge(G, x, y, "removed edge")
    _require_edge(G, a, v1, "removed edge")
    _require_edge(G, a, v2, "removed edge")
    nf = sorted(G.neighbors(a) - free_neighbors(G, a))
    if sorted((v1, v2)) != nf:
        raise ConstructionError(
            f"non-free neighbours of {a!r} are {nf}, not {sorted((v1, v2))}"
        )
    rest = G.without_edges([(x, y), (a, v1), (a, v2)])
    _require_edge(rest, a, x, "connecting edge")
    return list(inner) + [
        Polynomial.edge_monomial(x, y) + Polynomial.edge_monomial(a, v1),
        Polynomial.edge_monomial(a, v2),
    ]


def combine_case2(
    G: Graph, inner: Sequence[Polynomial], x: str, z1: str
) -> list[Polynomial]:
    """Append the plain edge monomial x*z1 to generators for G minus that
    edge (the removed neighbour lies on a cycle through x)."""
    _require_edge(G, x, z1, "removed edge")
    if z1 in free_neighbors(G, x):
        raise ConstructionError(f"{z1!r} is a free neighbour of {x!r}")
    return list(inner) + [Polynomial.edge_monomial(x, z1)]


def combine_case3(
    G: Graph,
    inner: Sequence[Polynomial],
    a: str,
    x: str,
    pairs: Sequence[tuple[str, str]],
    alpha: tuple[str, str] | None = None,
    beta: tuple[str, str] | None = None,
) -> list[Polynomial]:
    """Pair removed edges at the two endpoints of a connecting edge ax.

    ``pairs`` lists (w_i, u_i): the edges a*w_i and x*u_i are removed and
    the sums a*w_i + x*u_i appended. ``alpha`` and ``beta`` are optional
    leftover edges at a and x respectively; their sum (or the survivor,
    when only one is present) is appended last. The edge ax must survive
    in the remainder.
    """
    if not pairs and alpha is None and beta is None:
        raise ConstructionError("nothing to combine")
    removed: list[tuple[str, str]] = []
    out = list(inner)
    for w, u in pairs:
        _require_edge(G, a, w, "removed edge")
        _require_edge(G, x, u, "removed edge")
        removed += [(a, w), (x, u)]
        out.append(Polynomial.edge_monomial(a, w) + Polynomial.edge_monomial(x, u))
    tail = Polynomial.zero()
    if alpha is not None:
        _require_edge(G, *alpha, "leftover edge")
        removed.append(alpha)
        tail = tail + Polynomial.edge_monomial(*alpha)
    if beta is not None:
        _require_edge(G, *beta, "leftover edge")
        removed.append(beta)
        tail = tail + Polynomial.edge_monomial(*beta)
    if not tail.is_zero():
        out.append(tail)
    if len(set(make_edge(u, v) for u, v in removed)) != len(removed):
        raise ConstructionError("a removed edge is listed twice")
    rest = G.without_edges(removed)
    _require_edge(rest, a, x, "connecting edge")
    return out
