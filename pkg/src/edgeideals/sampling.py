"""Seeded random graph generators for tests and the self-test command."""

from __future__ import annotations

import random

from edgeideals.graphs import Graph, make_edge


def random_disjoint_cycle_graph(
    rng: random.Random,
    max_vertices: int = 12,
    max_cycles: int = 2,
) -> Graph:
    """A random graph whose cycles are pairwise vertex-disjoint.

    Cycles are laid down first on disjoint vertex sets, then the remaining
    vertices are attached as forest edges (each new vertex picks one
    existing anchor, or starts a fresh tree component occasionally), so no
    further cycle can appear. Labels are v0, v1, ...; at least one edge.
    """
    n = rng.randint(2, max_vertices)
    k = rng.randint(0, max_cycles)
    labels = [f"v{i}" for i in range(n)]
    edges: list[tuple[str, str]] = []
    used = 0
    for _ in range(k):
        length = rng.randint(3, 6)
        if used + length > n:
            break
        cyc = labels[used:used + length]
        edges += [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
        used += length
    for i in range(used, n):
        if i == 0 or rng.random() < 0.1:
            continue  # fresh tree root; a later vertex may attach to it
        anchor = labels[rng.randrange(i)]
        edges.append((anchor, labels[i]))
    G = Graph.from_edges(edges, isolated=())
    if not G.edges:  # tiny samples can come out edgeless; force one edge
        G = Graph.from_edges([(labels[0], labels[1])])
    return G


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi style graph on labels v0..v{n-1} (cycles unrestricted)."""
    labels = [f"v{i}" for i in range(n)]
    edges = [
        make_edge(labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(edges, isolated=labels)


def random_squarefree_monomials(
    rng: random.Random, n_vars: int, count: int
) -> list[tuple[str, ...]]:
    """Distinct random squarefree monomials of degree 1..3 over v0..v{n-1}."""
    labels = [f"v{i}" for i in range(n_vars)]
    out: set[tuple[str, ...]] = set()
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        deg = rng.randint(1, min(3, n_vars))
        out.add(tuple(sorted(rng.sample(labels, deg))))
    return sorted(out)
