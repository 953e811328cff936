"""Seeded random graph generators for the cross-validation suites."""

from __future__ import annotations

import random

from coverdepth.graph import Graph, is_connected, relabel


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges, randomly relabeled."""
    if n < 1:
        raise ValueError("n must be positive")
    if p is None:
        p = rng.uniform(0.0, 0.45)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(Graph.from_edges(n, sorted(edges)), perm)


def random_lift(rng: random.Random, g: Graph, k: int = 2, tries: int = 50) -> tuple[Graph, list[int]] | None:
    """Random connected k-fold cover of ``g`` and its covering map, or None."""
    for _ in range(tries):
        edges = []
        for u, v in g.edges():
            perm = list(range(k))
            rng.shuffle(perm)
            edges.extend((u * k + i, v * k + perm[i]) for i in range(k))
        h = Graph.from_edges(g.n * k, edges)
        if is_connected(h):
            return h, [x // k for x in range(h.n)]
    return None


def random_regular_like(rng: random.Random, n: int, d: int, tries: int = 200) -> Graph | None:
    """Connected d-regular graph by the configuration model with rejection."""
    if n * d % 2 or d >= n:
        return None
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if any(a == b for a, b in pairs):
            continue
        keys = {(min(a, b), max(a, b)) for a, b in pairs}
        if len(keys) != len(pairs):
            continue
        g = Graph.from_edges(n, sorted(keys))
        if is_connected(g):
            return g
    return None


def random_pair(rng: random.Random, n_max: int = 10) -> tuple[Graph, Graph]:
    """A connected pair with each side at most ``n_max`` vertices.

    The mix is skewed so that a good share of pairs agree to some depth:
    independent graphs, a graph and one of its 2-lifts, relabeled copies, and
    regular graphs of equal degree.
    """
    kind = rng.random()
    if kind < 0.35:
        return (
            random_connected_graph(rng, rng.randint(1, n_max)),
            random_connected_graph(rng, rng.randint(1, n_max)),
        )
    if kind < 0.65 and n_max >= 2:
        g = random_connected_graph(rng, rng.randint(1, n_max // 2))
        lifted = random_lift(rng, g)
        if lifted is not None:
            return (g, lifted[0]) if rng.random() < 0.5 else (lifted[0], g)
    if kind < 0.85:
        g = random_connected_graph(rng, rng.randint(1, n_max))
        perm = list(range(g.n))
        rng.shuffle(perm)
        return g, relabel(g, perm)
    d = rng.choice([2, 3, 4])
    a = random_regular_like(rng, rng.randint(d + 1, n_max), d)
    b = random_regular_like(rng, rng.randint(d + 1, n_max), d)
    if a is not None and b is not None:
        return a, b
    return random_connected_graph(rng, rng.randint(1, n_max)), random_connected_graph(
        rng, rng.randint(1, n_max)
    )


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """G(n, p), possibly disconnected."""
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )
