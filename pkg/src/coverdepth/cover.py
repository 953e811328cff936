"""Covering maps, truncated universal covers and rooted-tree canonical forms.

Two tree-side engines decide ``U^t_x(G) ≅ U^t_y(H)``:

* the explicit one builds the truncation node by node (non-backtracking walks)
  and compares AHU strings; it is bounded by a node budget.
* :class:`UnfoldingCanonizer` computes the same AHU isomorphism classes without
  materializing repeated subtrees: the subtree below a walk depends only on its
  last directed edge and the remaining depth, so ids are hash-consed per
  ``(edge, depth)``.  This makes depths in the hundreds cheap.

The color route (:func:`ucover_iso`, :func:`distinguishing_depth`) never builds
trees at all; it reads colors off a joint refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from coverdepth.graph import Graph, is_connected
from coverdepth.refinement import joint_refinement

DEFAULT_NODE_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The explicit truncation would exceed the node budget."""


def _require_connected(*graphs: Graph) -> None:
    for g in graphs:
        if not is_connected(g):
            raise ValueError("cover operations require connected graphs")


def is_covering_map(h: Graph, g: Graph, alpha: Sequence[int]) -> bool:
    """True iff ``alpha: V(H) -> V(G)`` is surjective and a bijection N(v) -> N(alpha(v))."""
    _require_connected(h)
    if len(alpha) != h.n:
        raise ValueError("alpha must be defined on every vertex of H")
    if any(not 0 <= a < g.n for a in alpha):
        raise ValueError("alpha maps outside V(G)")
    if len(set(alpha)) != g.n:
        return False
    for v in range(h.n):
        image = [alpha[w] for w in h.adjacency[v]]
        if len(image) != g.degree(alpha[v]):
            return False
        if sorted(image) != list(g.adjacency[alpha[v]]):
            return False
    return True


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree in topological layout: node 0 is the root, parents precede children."""

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    level: tuple[int, ...]
    projection: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def depth(self) -> int:
        return max(self.level) if self.level else 0

    @classmethod
    def from_parents(cls, parent: Sequence[int]) -> "RootedTree":
        """Build from a parent array with ``parent[0] == -1`` and ``parent[i] < i``."""
        kids: list[list[int]] = [[] for _ in parent]
        level = [0] * len(parent)
        for i, p in enumerate(parent):
            if i == 0:
                if p != -1:
                    raise ValueError("node 0 must be the root")
                continue
            if not 0 <= p < i:
                raise ValueError("parents must precede children")
            kids[p].append(i)
            level[i] = level[p] + 1
        return cls(tuple(parent), tuple(tuple(k) for k in kids), tuple(level))


def truncated_ucover(
    g: Graph, x: int, t: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> RootedTree:
    """Tree of non-backtracking walks of length <= t from ``x``.

    Node ``i`` stands for one walk; ``projection[i]`` is its last vertex.
    """
    _require_connected(g)
    if t < 0:
        raise ValueError("depth must be non-negative")
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range")
    parent = [-1]
    last = [x]
    prev = [-1]
    level = [0]
    kids: list[list[int]] = [[]]
    frontier = [0]
    for d in range(1, t + 1):
        nxt = []
        for node in frontier:
            w, p = last[node], prev[node]
            for z in g.adjacency[w]:
                if z == p:
                    continue
                if len(parent) >= node_budget:
                    raise BudgetExceeded(
                        f"U^{t}_{x} has more than {node_budget} nodes"
                    )
                idx = len(parent)
                parent.append(node)
                last.append(z)
                prev.append(w)
                level.append(d)
                kids.append([])
                kids[node].append(idx)
                nxt.append(idx)
        frontier = nxt
    return RootedTree(tuple(parent), tuple(tuple(k) for k in kids), tuple(level), tuple(last))


def ahu_canon(tree: RootedTree) -> str:
    """AHU canonical string: each node is ``(`` + sorted child strings + ``)``."""
    canon = [""] * tree.size
    for i in range(tree.size - 1, -1, -1):
        canon[i] = "(" + "".join(sorted(canon[c] for c in tree.children[i])) + ")"
    return canon[0] if tree.size else ""


def ucover_node_count(g: Graph, x: int, t: int) -> int:
    """Number of non-backtracking walks of length <= t from ``x``, without building them."""
    below = {(w, p): 1 for w in range(g.n) for p in g.adjacency[w]}
    total = 1
    for d in range(1, t + 1):
        total = 1 + sum(below[(z, x)] for z in g.adjacency[x])
        if d == t:
            break
        below = {
            (w, p): 1 + sum(below[(z, w)] for z in g.adjacency[w] if z != p)
            for (w, p) in below
        }
    return total


class UnfoldingCanonizer:
    """Hash-consed AHU classes of truncated universal covers.

    Ids are shared by every graph fed to the same instance, so equal ids mean
    isomorphic rooted trees across graphs.
    """

    def __init__(self) -> None:
        self._ids: dict[tuple[int, ...], int] = {(): 0}
        self._kids: list[tuple[int, ...]] = [()]
        self._strings: dict[int, str] = {}

    def intern(self, children: tuple[int, ...]) -> int:
        key = tuple(sorted(children))
        got = self._ids.get(key)
        if got is None:
            got = len(self._kids)
            self._ids[key] = got
            self._kids.append(key)
        return got

    def root_ids(self, g: Graph, depth: int) -> list[list[int]]:
        """``out[d][x]`` is the class of ``U^d_x(G)`` for ``d = 0..depth``."""
        _require_connected(g)
        adj = g.adjacency
        below = {(w, p): 0 for w in range(g.n) for p in adj[w]}
        out = [[0] * g.n]
        for _ in range(depth):
            out.append([self.intern(tuple(below[(z, x)] for z in adj[x])) for x in range(g.n)])
            below = {
                (w, p): self.intern(tuple(below[(z, w)] for z in adj[w] if z != p))
                for (w, p) in below
            }
        return out

    def canon_string(self, tree_id: int) -> str:
        """AHU string of a class; equals :func:`ahu_canon` of any member tree."""
        s = self._strings.get(tree_id)
        if s is None:
            s = "(" + "".join(sorted(self.canon_string(c) for c in self._kids[tree_id])) + ")"
            self._strings[tree_id] = s
        return s


def trunc_iso(
    g: Graph,
    x: int,
    h: Graph,
    y: int,
    t: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    method: str = "tree",
) -> bool:
    """Decide ``U^t_x(G) ≅ U^t_y(H)`` on the tree side.

    ``method="tree"`` builds both truncations (raises :class:`BudgetExceeded`);
    ``method="dag"`` uses :class:`UnfoldingCanonizer`.
    """
    _require_connected(g, h)
    if method == "tree":
        a = truncated_ucover(g, x, t, node_budget)
        b = truncated_ucover(h, y, t, node_budget)
        return ahu_canon(a) == ahu_canon(b)
    if method == "dag":
        canon = UnfoldingCanonizer()
        return canon.root_ids(g, t)[t][x] == canon.root_ids(h, t)[t][y]
    raise ValueError(f"unknown method {method!r}")


def ucover_iso(g: Graph, x: int, h: Graph, y: int) -> bool:
    """Full universal-cover isomorphism, read from joint colors at round 2n-1."""
    _require_connected(g, h)
    n = max(g.n, h.n)
    jr = joint_refinement(g, h)
    r = 2 * n - 1
    return jr.color_g(r, x) == jr.color_h(r, y)


def distinguishing_depth(g: Graph, x: int, h: Graph, y: int) -> int | None:
    """Least ``t`` with ``U^t_x(G) ≇ U^t_y(H)``, or None when the covers are isomorphic."""
    _require_connected(g, h)
    n = max(g.n, h.n)
    jr = joint_refinement(g, h)
    split = jr.first_split(x, y)
    if split is None or split > 2 * n - 1:
        return None
    return split
