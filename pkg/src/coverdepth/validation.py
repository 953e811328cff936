"""Dual-engine cross-checks between the tree side and the color side."""

from __future__ import annotations

import random
from dataclasses import dataclass

from coverdepth.cover import (
    UnfoldingCanonizer,
    ahu_canon,
    truncated_ucover,
    ucover_iso,
    ucover_node_count,
)
from coverdepth.equivalence import have_common_cover
from coverdepth.graph import Graph
from coverdepth.refinement import joint_refinement


@dataclass
class Tally:
    checked: int = 0
    mismatches: int = 0

    def add(self, agree: bool) -> None:
        self.checked += 1
        if not agree:
            self.mismatches += 1

    def merge(self, other: "Tally") -> None:
        self.checked += other.checked
        self.mismatches += other.mismatches


def uvsc_crosscheck(g: Graph, h: Graph, explicit_budget: int = 400) -> tuple[Tally, Tally]:
    """Compare tree isomorphism of U^i and joint colors C^i for all roots and i <= stab(G∪H)+1.

    Returns ``(tree_vs_color, explicit_vs_dag)``; the second tally compares AHU
    strings of explicitly built truncations with the shared-subtree canonizer
    wherever a truncation has at most ``explicit_budget`` nodes.
    """
    jr = joint_refinement(g, h)
    depth = jr.stab + 1
    canon = UnfoldingCanonizer()
    ids_g = canon.root_ids(g, depth)
    ids_h = canon.root_ids(h, depth)
    colors = Tally()
    explicit = Tally()
    for i in range(depth + 1):
        for x in range(g.n):
            for y in range(h.n):
                tree_eq = ids_g[i][x] == ids_h[i][y]
                colors.add(tree_eq == (jr.color_g(i, x) == jr.color_h(i, y)))
    for graph, ids in ((g, ids_g), (h, ids_h)):
        for x in range(graph.n):
            for i in range(depth + 1):
                if ucover_node_count(graph, x, i) > explicit_budget:
                    break
                s = ahu_canon(truncated_ucover(graph, x, i))
                explicit.add(s == canon.canon_string(ids[i][x]))
    return colors, explicit


def twon_check(g: Graph, h: Graph, rng: random.Random, samples: int = 4) -> Tally:
    """For root pairs isomorphic at depth 2n-1, check sampled depths up to 4n."""
    n = max(g.n, h.n)
    top = 4 * n
    canon = UnfoldingCanonizer()
    ids_g = canon.root_ids(g, top)
    ids_h = canon.root_ids(h, top)
    base = 2 * n - 1
    depths = sorted({top, base + 1} | {rng.randint(base, top) for _ in range(samples)})
    tally = Tally()
    for x in range(g.n):
        for y in range(h.n):
            if ids_g[base][x] != ids_h[base][y]:
                continue
            for d in depths:
                tally.add(ids_g[d][x] == ids_h[d][y])
    return tally


def common_conditions_agree(g: Graph, h: Graph) -> bool:
    """Conditions (2), (3), (4) of the common-cover test coincide."""
    res = have_common_cover(g, h)
    return res.condition2 == res.condition3 == res.condition4


def common_cover_vs_roots(g: Graph, h: Graph) -> bool:
    """have_common_cover agrees with existence of a root pair with isomorphic covers."""
    some = any(ucover_iso(g, x, h, y) for x in range(g.n) for y in range(h.n))
    return have_common_cover(g, h).answer == some
