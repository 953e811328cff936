"""Acceptance checks for the depth identities, the cross-engine agreement checks and the game solver.

Each check prints one ``ACCEPT <id> PASS|FAIL`` line; the session summary
repeats them (see conftest.py).  Run alone with::

    pytest tests/test_acceptance.py -v -s
"""

from __future__ import annotations

import functools
import itertools
import math
import time

import pytest

from coverdepth.constructions import ConstructionParams, construct_gst, construct_hst
from coverdepth.cover import distinguishing_depth
from coverdepth.equivalence import bisim_depth, fo2c_depth, fo2c_equivalent, have_common_cover
from coverdepth.experiments import (
    DEPTH_LAW_INSTANCES,
    FO2C_DEPTH_FIXTURES,
    STAB_FIXTURES,
    common_suite,
    twon_suite,
    uvsc_suite,
)
from coverdepth.graph import Graph, disjoint_union, gen_cycle, gen_path, gen_petersen
from coverdepth.refinement import joint_refinement, run_refinement

from oracles import count_spoiler_moves_game_depth, multiset_split_round, naive_stab

SEED = 20240601
RESULTS: dict[str, tuple[bool, str]] = {}


def criterion(cid: str, title: str, limit_s: float):
    """Record PASS/FAIL for ``cid``, print the line, and enforce the runtime limit."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            ok, detail = False, ""
            try:
                detail = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - t0
                assert elapsed < limit_s, f"took {elapsed:.1f}s, limit {limit_s}s"
                ok = True
            except AssertionError as exc:
                detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
                raise
            finally:
                elapsed = time.perf_counter() - t0
                line = f"ACCEPT {cid} {'PASS' if ok else 'FAIL'} [{elapsed:.2f}s] {title}"
                if detail:
                    line += f" :: {detail}"
                RESULTS[cid] = (ok, line)
                print(line)

        return run

    return wrap


@functools.lru_cache(maxsize=None)
def pair(s: int, t: int):
    p = ConstructionParams(s, t)
    return p, construct_gst(p), construct_hst(p)


def iso_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class, by minimum relabeled edge list."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen, reps = set(), []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        key = min(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms
        )
        if key not in seen:
            seen.add(key)
            reps.append(Graph.from_edges(n, edges))
    return reps


@criterion("1", "bisim depth from the roots is 2t(s+5)-1 on all five instances", 5.0)
def test_criterion_1_depth_law():
    got = {}
    for s, t in DEPTH_LAW_INSTANCES:
        _, g, h = pair(s, t)
        got[(s, t)] = bisim_depth(g.graph, g.root, h.graph, h.root)
    want = {(s, t): 2 * t * (s + 5) - 1 for s, t in DEPTH_LAW_INSTANCES}
    assert got == want, f"measured {got}, expected {want}"
    assert got[(3, 2)] == 31 and got[(3, 3)] == 47
    return ", ".join(f"{k}:{v}" for k, v in got.items())


T_RANGE = range(2, 7)


def padded_pair_numbers(t: int):
    p, g, h = pair(2 * t + 1, t)
    n = g.graph.n
    r = 2 * n - 14 * t - 14
    return p, g, h, n, r


@criterion("2a", "colors agree at round r=2n-14t-14 and split at r+1, t=2..6", 30.0)
def test_criterion_2_color_identities():
    depths = {}
    for t in T_RANGE:
        p, g, h, n, r = padded_pair_numbers(t)
        assert n == 2 * t * t + 13 * t + 6
        assert r == 2 * t * (p.s + 5) - 2 == 4 * t * t + 12 * t - 2
        jr = joint_refinement(g.graph, h.graph)
        assert jr.color_g(r, g.root) == jr.color_h(r, h.root), f"t={t}: split before r"
        assert jr.color_g(r + 1, g.root) != jr.color_h(r + 1, h.root), f"t={t}: no split at r+1"
        d = distinguishing_depth(g.graph, g.root, h.graph, h.root)
        assert d == r + 1, f"t={t}: distinguishing depth {d} != {r + 1}"
        depths[t] = (n, d)
    return ", ".join(f"t={t}: n={n} depth={d}" for t, (n, d) in depths.items())


@criterion("2b", "distinguishing depth r+1 exceeds n for every t=2..6", 30.0)
def test_criterion_2_depth_exceeds_n_for_all_t():
    rows = []
    for t in T_RANGE:
        _, g, h, n, r = padded_pair_numbers(t)
        d = distinguishing_depth(g.graph, g.root, h.graph, h.root)
        rows.append((t, n, d))
    failing = [(t, n, d) for t, n, d in rows if not d > n]
    assert any(d > n for _, n, d in rows), "no instance has depth > n"
    assert not failing, "depth <= n at " + ", ".join(f"t={t} (depth {d}, n={n})" for t, n, d in failing)


@criterion("3", "t=5: r = 158 > 2n - 16 sqrt(n) = 66 with n = 121", 30.0)
def test_criterion_3_bound():
    _, g, h, n, r = padded_pair_numbers(5)
    assert n == 121 and r == 158
    bound = 2 * n - 16 * math.isqrt(n)
    assert math.isqrt(n) ** 2 == n and bound == 66
    assert r > bound
    assert distinguishing_depth(g.graph, g.root, h.graph, h.root) == 159
    return f"r={r}, bound={bound}"


@criterion("4", "stab(G∪H) >= 2l+1 and stab(G) >= l-1, values pinned", 30.0)
def test_criterion_4_stab_bounds():
    measured = {}
    for s, t in DEPTH_LAW_INSTANCES:
        p, g, h = pair(s, t)
        sg = run_refinement(g.graph).stab
        sh = run_refinement(h.graph).stab
        su = joint_refinement(g.graph, h.graph).stab
        assert su >= 2 * p.l + 1, f"{(s, t)}: stab(G∪H)={su} < {2 * p.l + 1}"
        assert sg >= p.l - 1, f"{(s, t)}: stab(G)={sg} < {p.l - 1}"
        measured[(s, t)] = (sg, sh, su)
    assert measured == STAB_FIXTURES, f"fixtures drifted: {measured}"
    # the partition-based oracle reproduces the smallest instance's fixtures
    _, g, h = pair(3, 2)
    union = disjoint_union(g.graph, h.graph)[0]
    assert (naive_stab(g.graph.adjacency), naive_stab(h.graph.adjacency), naive_stab(union.adjacency)) == STAB_FIXTURES[(3, 2)]
    return ", ".join(f"{k}:{v}" for k, v in measured.items())


@criterion("5", "tree canon equality <=> color equality, 200 random pairs", 60.0)
def test_criterion_5_tree_vs_colors():
    colors, explicit = uvsc_suite(SEED, count=200, n_max=10)
    assert colors.checked > 0 and explicit.checked > 0
    assert colors.mismatches == 0, f"{colors.mismatches}/{colors.checked} disagreements"
    assert explicit.mismatches == 0, f"{explicit.mismatches}/{explicit.checked} canon disagreements"
    return f"{colors.checked} color checks, {explicit.checked} explicit-tree checks, 100%"


@criterion("6", "isomorphism at depth 2n-1 persists to sampled depths <= 4n, 50 pairs", 30.0)
def test_criterion_6_twon():
    tally = twon_suite(SEED + 1, count=50, n_max=10)
    assert tally.checked > 0
    assert tally.mismatches == 0, f"{tally.mismatches}/{tally.checked} violations"
    return f"{tally.checked} checks, 100%"


@criterion("7", "common-cover conditions agree on 100 pairs plus constructions", 30.0)
def test_criterion_7_common_cover():
    agree, roots = common_suite(SEED + 2, count=100, n_max=10)
    assert agree.checked == 100 + len(DEPTH_LAW_INSTANCES)
    assert agree.mismatches == 0, f"{agree.mismatches} pairs disagree"
    assert roots.mismatches == 0, f"{roots.mismatches} pairs disagree with root-pair search"
    assert have_common_cover(gen_cycle(3), gen_cycle(6)).answer is True
    assert have_common_cover(gen_path(3), gen_cycle(3)).answer is False
    return f"{agree.checked} pairs, root cross-check on {roots.checked}"


@criterion("8", "counting-game depth on (3,2) within bounds; solver = set-move oracle for n<=4", 600.0)
def test_criterion_8_counting_depth():
    p, g, h = pair(3, 2)
    n = g.graph.n
    d = fo2c_depth(g.graph, h.graph)
    sg, sh = run_refinement(g.graph).stab, run_refinement(h.graph).stab
    assert n == 34
    assert d is not None and p.l <= d <= min(sg, sh) + 2, f"D={d} outside [{p.l}, {min(sg, sh) + 2}]"
    assert d <= sg + 2 and d <= n + 1
    assert d == FO2C_DEPTH_FIXTURES[(3, 2)]
    # independent route to the same number: one more than the first round of multiset divergence
    assert multiset_split_round(g.graph.adjacency, h.graph.adjacency) + 1 == d

    graphs = [gr for k in range(1, 5) for gr in iso_classes(k)]
    checked = 0
    for a, b in itertools.product(graphs, repeat=2):
        want = count_spoiler_moves_game_depth(a.adjacency, b.adjacency)
        got = fo2c_depth(a, b)
        assert got == want, f"{a.edges()} vs {b.edges()}: solver {got}, oracle {want}"
        checked += 1
    return f"D={d} in [{p.l}, {min(sg, sh) + 2}], oracle agreement on {checked} pairs"


@criterion("9", "FO2# equivalence examples and equivalence <=> no depth", 60.0)
def test_criterion_9_equivalence():
    two_c3 = disjoint_union(gen_cycle(3), gen_cycle(3))[0]
    assert fo2c_equivalent(gen_cycle(6), two_c3) is True
    _, g, h = pair(3, 3)
    assert fo2c_equivalent(g.graph, h.graph) is False
    assert fo2c_depth(g.graph, h.graph) is not None
    checked = 0
    graphs = [gr for k in range(1, 6) for gr in iso_classes(k)]
    for a, b in itertools.product(graphs, repeat=2):
        assert fo2c_equivalent(a, b) == (fo2c_depth(a, b) is None), f"{a.edges()} vs {b.edges()}"
        checked += 1
    for s, t in DEPTH_LAW_INSTANCES:
        _, g, h = pair(s, t)
        assert fo2c_equivalent(g.graph, h.graph) == (fo2c_depth(g.graph, h.graph) is None)
        checked += 1
    assert fo2c_depth(gen_cycle(6), two_c3) is None
    return f"{checked} pairs"


@criterion("10", "stab = 0 for C3..C20 and the Petersen graph", 5.0)
def test_criterion_10_regular():
    for k in range(3, 21):
        assert run_refinement(gen_cycle(k)).stab == 0, f"C{k}"
    assert run_refinement(gen_petersen()).stab == 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
