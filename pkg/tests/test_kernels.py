import random

import numpy as np
import pytest

from coverdepth import _pykernels, kernels
from coverdepth.graph import adjacency_matrix, csr
from coverdepth.matching import has_perfect_matching, hopcroft_karp
from coverdepth.random_graphs import random_graph

compiled = pytest.importorskip("coverdepth._kernels")

scipy_sparse = pytest.importorskip("scipy.sparse")
from scipy.sparse.csgraph import maximum_bipartite_matching  # noqa: E402


def test_backend_reported():
    assert kernels.BACKEND in ("python", "cython")


def test_refine_round_backends_agree():
    rng = random.Random(11)
    for _ in range(80):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        off, tgt = csr(g)
        colors = np.asarray([rng.randrange(3) for _ in range(g.n)], dtype=np.int64)
        a, ka = _pykernels.refine_round(off, tgt, colors)
        b, kb = compiled.refine_round(off, tgt, colors)
        assert ka == kb
        assert list(a) == list(b)


def _random_allowed(rng, n, p):
    return (np.asarray([[rng.random() < p for _ in range(n)] for _ in range(n)], dtype=np.uint8)
            .reshape(n, n))


def test_perfect_matching_backends_and_scipy_agree():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 9)
        allowed = _random_allowed(rng, n, rng.uniform(0.1, 0.6))
        ref = maximum_bipartite_matching(scipy_sparse.csr_matrix(allowed), perm_type="column")
        expect = bool((ref >= 0).all())
        assert bool(_pykernels.perfect_matching_exists(allowed)) == expect
        assert bool(compiled.perfect_matching_exists(allowed)) == expect
        adj = [list(np.flatnonzero(row)) for row in allowed]
        assert has_perfect_matching(adj, n) == expect
        size, match = hopcroft_karp(adj, n)
        assert size == int((ref >= 0).sum())
        used = [j for j in match if j >= 0]
        assert len(used) == len(set(used)) == size
        assert all(allowed[i][j] for i, j in enumerate(match) if j >= 0)


def test_hopcroft_karp_rectangular():
    size, match = hopcroft_karp([[0], [0], [0, 1]], 2)
    assert size == 2
    assert not has_perfect_matching([[0], [0], [0, 1]], 2)


def test_survival_round_backends_agree():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(1, 8)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        ag, ah = adjacency_matrix(g), adjacency_matrix(h)
        alive = np.asarray([rng.random() < 0.8 for _ in range(n * n)], dtype=np.uint8)
        a = _pykernels.survival_round(ag, ah, alive)
        b = compiled.survival_round(ag, ah, alive)
        assert list(np.asarray(a)) == list(np.asarray(b))


def test_survival_round_unequal_sizes():
    g, h = random_graph(random.Random(0), 3), random_graph(random.Random(1), 4)
    alive = np.ones(12, dtype=np.uint8)
    out = kernels.survival_round(adjacency_matrix(g), adjacency_matrix(h), alive)
    assert not np.asarray(out).any()
