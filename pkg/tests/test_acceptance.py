"""Acceptance gate: one pass/fail line per criterion.

Each criterion is independent; a failure prints its line before the assert
fires so the summary stays readable.
"""

import itertools
import random
import time

from cases import (
    BENCH1_BIG_HEIGHT,
    BENCH1_CERT,
    BENCH1_CYCLE_RANK,
    BENCH2_BIG_HEIGHT,
    BENCH2_CERT,
    BENCH2_CYCLE_RANK,
    bench1,
    bench2,
)
from edgeideals.certificates import construct_generators
from edgeideals.covers import (
    VertexCover,
    big_height,
    is_minimal_cover,
    minimal_covers,
    redundant_neighbors,
    vertex_in_all_maximum_covers,
)
from edgeideals.graphs import Graph, add_whisker, cycle_structure, glue_leaves
from edgeideals.groebner import (
    Polynomial,
    monomial_radical_membership,
    radical_membership,
    verify_radical_equals_edge_ideal,
)
from edgeideals.polynomials import parse_polynomial as P
from edgeideals.sampling import (
    random_disjoint_cycle_graph,
    random_graph,
    random_squarefree_monomials,
)
from test_groebner import rabinowitsch_member


def report(n: int, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, f"criterion {n}: {detail}"


def test_criterion_1_first_benchmark():
    t0 = time.perf_counter()
    G = bench1()
    bh = big_height(G)
    rank = cycle_structure(G).cycle_rank
    dt = time.perf_counter() - t0
    ok = bh == BENCH1_BIG_HEIGHT and rank == BENCH1_CYCLE_RANK and dt < 1.0
    report(1, ok, f"benchmark 1 big height {bh}, cycle rank {rank} ({dt:.3f}s < 1s)")


def test_criterion_2_second_benchmark():
    t0 = time.perf_counter()
    G = bench2()
    bh = big_height(G)
    rank = cycle_structure(G).cycle_rank
    dt = time.perf_counter() - t0
    ok = bh == BENCH2_BIG_HEIGHT and rank == BENCH2_CYCLE_RANK and dt < 5.0
    report(2, ok, f"benchmark 2 big height {bh}, cycle rank {rank} ({dt:.3f}s < 5s)")


def test_criterion_3_reference_certificates_and_deletions():
    t0 = time.perf_counter()
    failures = []
    for name, G, texts in (
        ("benchmark 1", bench1(), BENCH1_CERT),
        ("benchmark 2", bench2(), BENCH2_CERT),
    ):
        gens = [P(s) for s in texts]
        if not verify_radical_equals_edge_ideal(gens, G).ok:
            failures.append(f"{name} full certificate rejected")
        for i in range(len(gens)):
            if verify_radical_equals_edge_ideal(gens[:i] + gens[i + 1:], G).ok:
                failures.append(f"{name} deletion {i} accepted")
    dt = time.perf_counter() - t0
    ok = not failures and dt < 60.0
    report(3, ok, f"reference certificates pass, all 18 deletions fail "
                  f"({dt:.1f}s < 60s){'; ' + '; '.join(failures) if failures else ''}")


def test_criterion_4_construction_on_random_graphs():
    rng = random.Random(20260823)
    t0 = time.perf_counter()
    failures = 0
    for i in range(500):
        G = random_disjoint_cycle_graph(rng, max_vertices=12, max_cycles=2)
        try:
            cert = construct_generators(G)
        except Exception:
            failures += 1
            continue
        n = len(cycle_structure(G).cycles)
        if len(cert.generators) > big_height(G) + n or not cert.verify().ok:
            failures += 1
    dt = time.perf_counter() - t0
    report(4, failures == 0,
           f"500 random graphs constructed and verified, {failures} failures "
           f"({dt:.1f}s); generator counts checked against the upper bound only")


def test_criterion_5_cover_laws():
    rng = random.Random(5150)
    violations = 0
    t0 = time.perf_counter()
    for _ in range(1000):
        G = random_graph(rng, rng.randint(2, 7), 0.35)
        if not G.edges:
            continue
        covers = minimal_covers(G)
        bh = max(len(c) for c in covers)

        # whisker law: big height grows by at most one, and stays put
        # exactly when the whiskered vertex is in every maximum cover
        x = rng.choice(G.vertices)
        W, _ = add_whisker(G, x)
        bw = big_height(W)
        if not (bh <= bw <= bh + 1):
            violations += 1
        if (bw == bh) != vertex_in_all_maximum_covers(G, x):
            violations += 1

        # gluing law: merging two leaves on disjoint terminal edges costs
        # at most one unit of big height
        pairs = [
            (l1, l2)
            for l1, l2 in itertools.combinations(sorted(G.leaves()), 2)
            if len({l1, l2} | G.neighbors(l1) | G.neighbors(l2)) == 4
        ]
        if pairs:
            l1, l2 = rng.choice(pairs)
            glued, _ = glue_leaves(G, l1, l2)
            if big_height(glued) < bh - 1:
                violations += 1

        # redundancy: dropping a redundant neighbour of x from a cover
        # avoiding x leaves a minimal cover of the graph without that edge
        for c in covers:
            if x in c:
                continue
            for y in redundant_neighbors(G, VertexCover(c, G), x):
                if not is_minimal_cover(G.without_edges([(x, y)]), c - {y}):
                    violations += 1
    dt = time.perf_counter() - t0
    report(5, violations == 0,
           f"1000 samples of whisker, gluing and redundancy laws, "
           f"{violations} violations ({dt:.1f}s)")


def _brute_minimal_covers(G: Graph) -> list[frozenset[str]]:
    out = []
    for r in range(len(G.vertices) + 1):
        for s in itertools.combinations(G.vertices, r):
            if is_minimal_cover(G, frozenset(s)):
                out.append(frozenset(s))
    return sorted(out, key=lambda c: tuple(sorted(c)))


def test_criterion_6_oracle_agreement():
    t0 = time.perf_counter()
    suite = [
        bench1(),
        bench2(),
        Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d")]),
        Graph.from_edges([("c", "l1"), ("c", "l2"), ("c", "l3")]),
        Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]),
        Graph.from_edges(
            [("a", "b"), ("b", "c"), ("a", "c"), ("a", "p"), ("b", "q"), ("c", "r")]
        ),
    ]
    enum_ok = all(minimal_covers(G) == _brute_minimal_covers(G) for G in suite)

    rng = random.Random(606)
    mono_mismatches = 0
    for _ in range(200):
        gens = [
            Polynomial.monomial(m)
            for m in random_squarefree_monomials(rng, 5, rng.randint(1, 4))
        ]
        targets = random_squarefree_monomials(rng, 5, 1)
        f = Polynomial.monomial(targets[0] if targets else ("v0",))
        fast = monomial_radical_membership(f, gens)
        if fast != rabinowitsch_member(f, gens):
            mono_mismatches += 1
        if fast != radical_membership(f, gens):
            mono_mismatches += 1
    dt = time.perf_counter() - t0
    ok = enum_ok and mono_mismatches == 0
    report(6, ok,
           f"cover enumeration matches subset brute force on {len(suite)} suite "
           f"graphs; monomial fast path matches the complete decision on 200 "
           f"instances, {mono_mismatches} mismatches ({dt:.1f}s)")


def test_criterion_7_square_identity():
    a, w, x, y = (Polynomial.variable(v) for v in "awxy")
    identity = (x * y) ** 2 == x * y * (x * y + a * w) - a * x * y * w
    member = radical_membership(x * y, [a * x, x * y + a * w])
    report(7, identity and member,
           "x^2*y^2 = x*y*(x*y + a*w) - a*x*y*w holds exactly and "
           "x*y lies in the radical of (a*x, x*y + a*w)")
