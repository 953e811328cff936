import itertools
import random

import numpy as np
import pytest

from coverdepth.equivalence import (
    SizeGuardExceeded,
    bisim_depth,
    fo2c_depth,
    fo2c_depth_bounds,
    fo2c_equivalent,
    have_common_cover,
    solve_counting_game,
)
from coverdepth.graph import (
    Graph,
    complement,
    disjoint_union,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    relabel,
)
from coverdepth.random_graphs import random_connected_graph, random_graph, random_lift
from coverdepth.refinement import stab

from oracles import bisim_game_duplicator_wins, count_spoiler_moves_game_depth


def two_triangles():
    return disjoint_union(gen_cycle(3), gen_cycle(3))[0]


def test_common_cover_examples():
    assert have_common_cover(gen_cycle(3), gen_cycle(6)).answer
    assert not have_common_cover(gen_path(3), gen_cycle(3)).answer
    res = have_common_cover(gen_path(4), gen_path(5))
    assert not res.answer and res.condition2 == res.condition3 == res.condition4


def test_common_cover_lifts():
    rng = random.Random(12)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(1, 7))
        lifted = random_lift(rng, g, k=rng.choice([2, 3]))
        if lifted is not None:
            assert have_common_cover(g, lifted[0]).answer
            assert have_common_cover(lifted[0], g).answer


def test_common_cover_requires_connected():
    with pytest.raises(ValueError):
        have_common_cover(two_triangles(), gen_cycle(3))


def test_bisim_depth_vs_game_oracle():
    rng = random.Random(13)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(1, 5), 0.3)
        h = random_connected_graph(rng, rng.randint(1, 5), 0.3)
        u, v = rng.randrange(g.n), rng.randrange(h.n)
        d = bisim_depth(g, u, h, v)
        limit = 2 * max(g.n, h.n) + 1
        for r in range(limit):
            wins = bisim_game_duplicator_wins(g.adjacency, u, h.adjacency, v, r)
            assert wins == (d is None or r < d), (g, h, u, v, r, d)


def test_bisim_depth_small():
    assert bisim_depth(gen_path(3), 0, gen_path(3), 1) == 1
    assert bisim_depth(gen_cycle(3), 0, gen_cycle(6), 2) is None


def test_fo2c_examples():
    assert fo2c_equivalent(gen_cycle(6), two_triangles())
    assert fo2c_depth(gen_cycle(6), two_triangles()) is None
    assert fo2c_depth(gen_complete(2), Graph.from_edges(2, [])) == 2
    assert fo2c_depth(gen_path(3), gen_path(4)) == 1
    assert not fo2c_equivalent(gen_path(3), gen_path(4))
    assert fo2c_equivalent(Graph.from_edges(0, []), Graph.from_edges(0, []))


def test_fo2c_equivalent_on_disconnected_pairs():
    # both sides disconnected: decided on complements
    g = disjoint_union(gen_cycle(6), gen_path(1))[0]
    h = disjoint_union(two_triangles(), gen_path(1))[0]
    assert fo2c_equivalent(g, h)
    assert fo2c_depth(g, h) is None


def test_fo2c_relabeled_copy_equivalent():
    rng = random.Random(1)
    g = gen_petersen()
    perm = list(range(10))
    rng.shuffle(perm)
    assert fo2c_equivalent(g, relabel(g, perm))
    assert fo2c_depth(g, relabel(g, perm)) is None


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def test_solver_matches_set_game_oracle_n5_subset():
    rng = random.Random(21)
    graphs = list(all_graphs(5))
    for _ in range(60):
        g, h = rng.choice(graphs), rng.choice(graphs)
        assert fo2c_depth(g, h) == count_spoiler_moves_game_depth(g.adjacency, h.adjacency)


def test_equivalence_iff_no_depth():
    rng = random.Random(22)
    for _ in range(150):
        n = rng.randint(1, 9)
        g, h = random_graph(rng, n, rng.random()), random_graph(rng, n, rng.random())
        if rng.random() < 0.3:
            perm = list(range(n))
            rng.shuffle(perm)
            h = relabel(g, perm)
        assert fo2c_equivalent(g, h) == (fo2c_depth(g, h) is None)


def test_depth_within_stab_bound():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 9)
        g, h = random_graph(rng, n, 0.4), random_graph(rng, n, 0.4)
        d = fo2c_depth(g, h)
        if d is not None:
            assert d <= min(stab(g), stab(h)) + 2
            b = fo2c_depth_bounds(g, h)
            assert b.lower <= d <= b.upper


def test_depth_bounds_shapes():
    assert fo2c_depth_bounds(gen_cycle(6), two_triangles()).as_dict() == {"equivalent": True}
    assert fo2c_depth_bounds(gen_path(2), gen_path(3)).as_dict() == {
        "equivalent": False, "lower": 1, "upper": 1}


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        fo2c_depth(gen_path(70), gen_path(70))
    assert fo2c_depth(gen_path(70), gen_star(69), size_guard=80) is not None


def test_solution_tables():
    sol = solve_counting_game(gen_path(3), gen_star(2))
    assert sol.equivalent
    sol = solve_counting_game(gen_path(4), gen_star(3))
    assert sol.depth == len(sol.tables) - 1
    last, first = sol.tables[-1], sol.tables[0]
    assert first.alive.all() and first.empty and not last.empty
    t = first.two_table()
    assert t.shape == (4, 4, 4, 4)
    for a, b, u, v in itertools.product(range(4), repeat=4):
        assert bool(t[a, b, u, v]) == first.two((a, b), (u, v))
    assert not first.two((0, 0), (0, 1))
    assert first.single(0, 0)


def test_complement_invariance():
    rng = random.Random(24)
    for _ in range(40):
        n = rng.randint(2, 8)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        assert fo2c_depth(g, h) == fo2c_depth(complement(g), complement(h))


def test_tables_monotone():
    g, h = gen_path(6), gen_cycle(6)
    sol = solve_counting_game(g, h)
    for a, b in zip(sol.tables, sol.tables[1:]):
        assert not np.any(b.alive & ~a.alive)
