"""Generators for the extremal pairs G_{s,t}, H_{s,t} and their type metadata.

Both graphs are chains of blocks stacked upward from a single degree-1 root.
A tail block ``B_s`` (s + 10 vertices) is::

    path p_1 .. p_s  ->  A  ->  two diamonds (B, C, C, B)  ->  top A

where p_1 hangs from the previous block's top A.  ``G_{s,t}`` is t tail blocks
followed by an s-path, an A and a gadget of two B's sharing two C's.
``H_{s,t}`` is t - 1 tail blocks followed by an s-path, an A carrying two
diamonds whose tops end in two separate A's; those two A's are joined by an
s-path and by the same two-B/two-C gadget.

Path vertices get palindromic types P1, P2, ..., P2, P1.  Vertex ids follow
emission order: bottom to top, and within a block path, A, left diamond,
right diamond, top A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from coverdepth.graph import Graph, bfs_levels

PAD = "pad"


@dataclass(frozen=True)
class ConstructionParams:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 3 or self.s % 2 == 0:
            raise ValueError(f"s must be odd and >= 3 (got {self.s})")
        if self.t < 2:
            raise ValueError(f"t must be >= 2 (got {self.t})")

    @property
    def n(self) -> int:
        return (self.t + 1) * (self.s + 10) - 5

    @property
    def l(self) -> int:  # noqa: E743
        return self.t * (self.s + 5) - 1

    @property
    def path_types(self) -> int:
        return math.ceil(self.s / 2)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    root: int
    types: tuple[str, ...]
    levels: tuple[int, ...]
    params: ConstructionParams
    name: str = ""
    pendants: int = 0

    def sidecar(self) -> dict:
        return {"root": self.root, "types": list(self.types), "levels": list(self.levels)}


@dataclass
class _Builder:
    s: int
    types: list[str] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)

    def vertex(self, tag: str, *attach: int) -> int:
        v = len(self.types)
        self.types.append(tag)
        self.edges.extend((a, v) for a in attach)
        return v

    def path(self, below: int | None) -> tuple[int, int]:
        """Typed s-path; returns its two end vertices (first, last)."""
        first = prev = None
        for i in range(self.s):
            tag = f"P{min(i + 1, self.s - i)}"
            v = self.vertex(tag) if prev is None else self.vertex(tag, prev)
            if prev is None:
                first = v
                if below is not None:
                    self.edges.append((below, v))
            prev = v
        return first, prev

    def diamond(self, below: int) -> int:
        bottom = self.vertex("B", below)
        c1 = self.vertex("C", bottom)
        c2 = self.vertex("C", bottom)
        return self.vertex("B", c1, c2)

    def tail_block(self, below: int | None) -> tuple[int, int]:
        first, last = self.path(below)
        a = self.vertex("A", last)
        left = self.diamond(a)
        right = self.diamond(a)
        top = self.vertex("A", left, right)
        return first, top

    def two_b_gadget(self, left_a: int, right_a: int) -> None:
        b1 = self.vertex("B", left_a)
        b2 = self.vertex("B", right_a)
        self.vertex("C", b1, b2)
        self.vertex("C", b1, b2)

    def finish(self, root: int, params: ConstructionParams, name: str) -> LabeledGraph:
        g = Graph.from_edges(len(self.types), self.edges)
        return LabeledGraph(g, root, tuple(self.types), tuple(bfs_levels(g, root)), params, name)


@dataclass(frozen=True)
class BlockFragment:
    graph: Graph
    types: tuple[str, ...]
    bottom: int
    top: int


def tail_block(s: int) -> BlockFragment:
    ConstructionParams(s, 2)
    b = _Builder(s)
    bottom, top = b.tail_block(None)
    return BlockFragment(Graph.from_edges(len(b.types), b.edges), tuple(b.types), bottom, top)


def _params(s: int | ConstructionParams, t: int | None) -> ConstructionParams:
    if isinstance(s, ConstructionParams):
        return s
    if t is None:
        raise TypeError("t is required")
    return ConstructionParams(s, t)


def construct_gst(s: int | ConstructionParams, t: int | None = None) -> LabeledGraph:
    p = _params(s, t)
    b = _Builder(p.s)
    root, top = b.tail_block(None)
    for _ in range(p.t - 1):
        _, top = b.tail_block(top)
    _, last = b.path(top)
    a = b.vertex("A", last)
    b.two_b_gadget(a, a)
    return b.finish(root, p, f"G_{p.s},{p.t}")


def construct_hst(s: int | ConstructionParams, t: int | None = None) -> LabeledGraph:
    p = _params(s, t)
    b = _Builder(p.s)
    root, top = b.tail_block(None)
    for _ in range(p.t - 2):
        _, top = b.tail_block(top)
    _, last = b.path(top)
    a = b.vertex("A", last)
    left = b.diamond(a)
    right = b.diamond(a)
    a_left = b.vertex("A", left)
    a_right = b.vertex("A", right)
    first, last = b.path(a_left)
    b.edges.append((last, a_right))
    b.two_b_gadget(a_left, a_right)
    return b.finish(root, p, f"H_{p.s},{p.t}")


def padded_base_size(t: int) -> int:
    """Vertex count of G_{2t+1,t}: 2t^2 + 13t + 6."""
    return 2 * t * t + 13 * t + 6


def _pad(lg: LabeledGraph, k: int) -> LabeledGraph:
    if k == 0:
        return lg
    n0 = lg.graph.n
    edges = lg.graph.edges() + [(lg.root, n0 + i) for i in range(k)]
    g = Graph.from_edges(n0 + k, edges)
    types = lg.types + (PAD,) * k
    return LabeledGraph(g, lg.root, types, tuple(bfs_levels(g, lg.root)), lg.params, lg.name, k)


def construct_padded_pair(n: int) -> tuple[LabeledGraph, LabeledGraph]:
    """n-vertex pair: G_{2t+1,t}, H_{2t+1,t} for the largest fitting t, padded at the roots."""
    if n < padded_base_size(2):
        raise ValueError(f"n must be at least {padded_base_size(2)}")
    t = 2
    while padded_base_size(t + 1) <= n:
        t += 1
    k = n - padded_base_size(t)
    p = ConstructionParams(2 * t + 1, t)
    return _pad(construct_gst(p), k), _pad(construct_hst(p), k)


def type_rank(tag: str, s: int) -> int:
    """Position in the fixed order P1 < P2 < ... < A < B < C < pad."""
    k = math.ceil(s / 2)
    if tag.startswith("P"):
        return int(tag[1:]) - 1
    return k + {"A": 0, "B": 1, "C": 2, PAD: 3}[tag]


def orient_by_type(lg: LabeledGraph) -> list[tuple[int, int]]:
    """Orient each edge from the lower type to the higher one."""
    arcs = []
    for u, v in lg.graph.edges():
        ru, rv = type_rank(lg.types[u], lg.params.s), type_rank(lg.types[v], lg.params.s)
        if ru == rv:
            raise ValueError(f"edge {u}-{v} joins two vertices of type {lg.types[u]}")
        arcs.append((u, v) if ru < rv else (v, u))
    return arcs


def type_profiles(*graphs: LabeledGraph) -> dict[str, set[tuple[tuple[str, int], ...]]]:
    """Type -> set of neighbor-type multisets seen over all non-root vertices."""
    out: dict[str, set] = {}
    for lg in graphs:
        for v in range(lg.graph.n):
            if v == lg.root:
                continue
            counts: dict[str, int] = {}
            for w in lg.graph.adjacency[v]:
                counts[lg.types[w]] = counts.get(lg.types[w], 0) + 1
            out.setdefault(lg.types[v], set()).add(tuple(sorted(counts.items())))
    return out


def level_types(*graphs: LabeledGraph, upto: int) -> dict[int, set[str]]:
    """Level -> set of types found at that level (levels 0..upto) across the graphs."""
    out: dict[int, set[str]] = {d: set() for d in range(upto + 1)}
    for lg in graphs:
        for v, d in enumerate(lg.levels):
            if d <= upto:
                out[d].add(lg.types[v])
    return out


def self_check(s: int = 3, t: int = 2) -> bool:
    """End-to-end law: the bisimulation depth from the roots is 2l + 1."""
    from coverdepth.equivalence import bisim_depth

    p = ConstructionParams(s, t)
    g, h = construct_gst(p), construct_hst(p)
    return bisim_depth(g.graph, g.root, h.graph, h.root) == 2 * p.l + 1
