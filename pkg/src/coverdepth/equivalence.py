"""Common covers, counting-bisimulation depth and two-variable counting-logic depth.

The exact depth ``D(G, H)`` is computed by backward induction over the
2-pebble counting game in bijection form: in every round Duplicator commits
to a bijection V(G) -> V(H) and Spoiler picks where the moved pebble lands.
Positions are: no pebble, one pebbled pair, two pebbled pairs.

With ``M_r(q)`` meaning "Duplicator survives r rounds after the free pebble is
placed against a stationary pair q", survival tables collapse to one boolean
per pair::

    T_r(p, q) = consistent(p, q) and M_r(p) and M_r(q)
    M_r(q)    = M_{r-1}(q) and PM{x : consistent(x, q) and M_{r-1}(x)}
    E_r       = PM{x : E_{r-1} and M_{r-1}(x)}          (empty board)

where ``PM`` asks for a perfect matching between V(G) and V(H) using the given
pairs, and ``M_0`` is all-true.  ``D(G, H)`` is the least r with ``E_r`` false.
Lifting and re-placing the same pebble is the ``E_r`` conjunct of the one-pebble
state ``S_r = E_r and M_r``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from coverdepth import kernels
from coverdepth.graph import Graph, adjacency_matrix, complement, is_connected
from coverdepth.refinement import joint_refinement, run_refinement

log = logging.getLogger(__name__)

DEFAULT_SIZE_GUARD = 64


class SizeGuardExceeded(ValueError):
    """The exact game solver was asked to run on graphs above the size guard."""


def bisim_depth(g: Graph, u: int, h: Graph, v: int) -> int | None:
    """Least ``i`` such that Spoiler wins the i-round counting bisimulation game from (u, v).

    Equals the first round where joint colors of ``u`` and ``v`` differ; None
    if they never do.
    """
    return joint_refinement(g, h).first_split(u, v)


@dataclass(frozen=True)
class CommonCoverResult:
    answer: bool
    condition2: bool
    condition3: bool
    condition4: bool
    stab_g: int
    n: int

    def as_dict(self) -> dict:
        return {
            "common_cover": self.answer,
            "n": self.n,
            "stab_g": self.stab_g,
            "condition2_intersect_at_2n-1": self.condition2,
            "condition3_equal_at_2n-1": self.condition3,
            "condition4_equal_at_stab_g+1": self.condition4,
        }


def have_common_cover(g: Graph, h: Graph) -> CommonCoverResult:
    """Common cover iff G and H show the same joint color set right after G alone stabilizes."""
    if not (is_connected(g) and is_connected(h)):
        raise ValueError("common-cover decision requires connected graphs")
    n = max(g.n, h.n)
    jr = joint_refinement(g, h)
    late = 2 * n - 1
    c2 = bool(jr.color_set_g(late) & jr.color_set_h(late))
    c3 = jr.color_set_g(late) == jr.color_set_h(late)
    s = jr.stab_g
    c4 = jr.color_set_g(s + 1) == jr.color_set_h(s + 1)
    if not c2 == c3 == c4:
        raise AssertionError(f"common-cover conditions disagree: {c2=} {c3=} {c4=}")
    return CommonCoverResult(c4, c2, c3, c4, s, n)


def _connected_orientation(g: Graph, h: Graph) -> tuple[Graph, Graph]:
    """Return a pair equivalent for FO²# whose first graph is connected."""
    if is_connected(g):
        return g, h
    if is_connected(h):
        return h, g
    # the complement of a disconnected graph is connected
    return complement(g), complement(h)


def fo2c_equivalent(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if g.n == 0:
        return True
    a, b = _connected_orientation(g, h)
    jr = joint_refinement(a, b)
    s = jr.stab_g
    return jr.color_set_g(s + 1) == jr.color_set_h(s + 1)


@dataclass(frozen=True)
class PairTable:
    """Survival data after ``round`` rounds of backward induction.

    ``alive[a, b]`` is ``M_r((a, b))``; ``empty`` is ``E_r``.
    """

    round: int
    alive: np.ndarray
    empty: bool
    adj_g: np.ndarray
    adj_h: np.ndarray

    def single(self, a: int, b: int) -> bool:
        """``S_r``: Duplicator survives r rounds from one pebble on (a, b)."""
        return bool(self.empty and self.alive[a, b])

    def consistent(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        (a, b), (u, v) = p, q
        return (a == u) == (b == v) and self.adj_g[a, u] == self.adj_h[b, v]

    def two(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        """``T_r``: Duplicator survives r rounds from pebbles on p and q."""
        return bool(self.consistent(p, q) and self.alive[p] and self.alive[q])

    def two_table(self) -> np.ndarray:
        """Dense ``T_r`` over ``(a, b, u, v)``; O(n^4) memory, for small inputs."""
        ng, nh = self.alive.shape
        eq = np.equal.outer(np.eye(ng, dtype=bool), np.eye(nh, dtype=bool))  # (a,u,b,v)
        same = np.equal.outer(self.adj_g, self.adj_h)  # (a,u,b,v)
        cons = (eq & same).transpose(0, 2, 1, 3)  # (a,b,u,v)
        return cons & self.alive[:, :, None, None] & self.alive[None, None, :, :]


@dataclass(frozen=True)
class CountingGameSolution:
    depth: int | None
    tables: tuple[PairTable, ...]
    round_cap: int

    @property
    def equivalent(self) -> bool:
        return self.depth is None


def solve_counting_game(
    g: Graph, h: Graph, size_guard: int = DEFAULT_SIZE_GUARD
) -> CountingGameSolution:
    """Backward induction for the 2-pebble counting game from the empty position."""
    if max(g.n, h.n) > size_guard:
        raise SizeGuardExceeded(
            f"exact solver limited to {size_guard} vertices per graph (got {g.n}, {h.n})"
        )
    adj_g, adj_h = adjacency_matrix(g), adjacency_matrix(h)
    union_stab = joint_refinement(g, h).stab
    cap = union_stab + 3
    alive = np.ones((g.n, h.n), dtype=bool)
    tables = [PairTable(0, alive, True, adj_g, adj_h)]
    if g.n != h.n:
        # a counting quantifier on the vertex count already distinguishes
        return CountingGameSolution(1, tuple(tables), cap)
    if g.n == 0:
        return CountingGameSolution(None, tuple(tables), cap)
    r = 0
    while True:
        r += 1
        prev = tables[-1]
        flat = prev.alive.astype(np.uint8).ravel()
        nxt = kernels.survival_round(adj_g, adj_h, flat).reshape(g.n, h.n).astype(bool)
        single_prev = prev.alive if prev.empty else np.zeros_like(prev.alive)
        empty = bool(kernels.perfect_matching_exists(single_prev.astype(np.uint8)))
        tables.append(PairTable(r, nxt, empty, adj_g, adj_h))
        if not empty:
            if r > cap - 1:
                log.warning("depth %d exceeds stab(G∪H)+2 = %d", r, cap - 1)
            return CountingGameSolution(r, tuple(tables), cap)
        if empty == prev.empty and np.array_equal(nxt, prev.alive):
            return CountingGameSolution(None, tuple(tables), cap)


def fo2c_depth(g: Graph, h: Graph, size_guard: int = DEFAULT_SIZE_GUARD) -> int | None:
    """Exact minimum quantifier depth of an FO²# sentence distinguishing G and H.

    None when G and H are FO²#-equivalent.
    """
    return solve_counting_game(g, h, size_guard).depth


@dataclass(frozen=True)
class DepthBounds:
    lower: int | None
    upper: int | None
    equivalent: bool

    def as_dict(self) -> dict:
        if self.equivalent:
            return {"equivalent": True}
        return {"equivalent": False, "lower": self.lower, "upper": self.upper}


def fo2c_depth_bounds(g: Graph, h: Graph) -> DepthBounds:
    """Cheap interval for ``D(G, H)`` from stabilization indices."""
    if fo2c_equivalent(g, h):
        return DepthBounds(None, None, True)
    if g.n != h.n:
        return DepthBounds(1, 1, False)
    upper = min(run_refinement(g).stab, run_refinement(h).stab) + 2
    return DepthBounds(1, min(upper, g.n + 1), False)
