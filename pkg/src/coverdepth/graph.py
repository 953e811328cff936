"""Undirected simple graphs on dense 0-based vertex ids, plus the edge-list text format.

The text format is::

    n m
    u v        (m lines, 0 <= u < v < n, sorted lexicographically)

Lines starting with ``#`` are comments.  A trailing newline is always written
and optional on read.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as sorted adjacency tuples."""

    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        # cached lazily; frozen dataclass so bypass __setattr__
        try:
            return self.__dict__["_adjsets_cache"]
        except KeyError:
            sets = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_adjsets_cache", sets)
            return sets

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, a in enumerate(self.adjacency) for v in a if u < v]

    def check(self) -> None:
        """Assert the representation invariants (symmetric, loop-free, strictly sorted)."""
        for u, a in enumerate(self.adjacency):
            assert all(a[i] < a[i + 1] for i in range(len(a) - 1)), f"unsorted at {u}"
            for v in a:
                assert 0 <= v < self.n and v != u, f"bad neighbor {v} of {u}"
                assert u in self._adjsets[v], f"asymmetric edge {u}-{v}"


def parse_graph(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            what = "header" if header is None else "edge"
            raise GraphFormatError(f"malformed {what} {raw!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header, header_line = (a, b), lineno
            continue
        n = header[0]
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the {header[1]} edges declared", lineno)
        if a >= n or b >= n:
            raise GraphFormatError(f"vertex index out of range (n={n})", lineno)
        if a == b:
            raise GraphFormatError(f"loop edge at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing header", 1)
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header declares {header[1]} edges, found {len(edges)}", header_line
        )
    return Graph.from_edges(header[0], edges)


def serialize_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize_graph(g))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, int]:
    """Return ``(G ∪ H, offset)``; vertex ``i`` of ``h`` becomes ``offset + i``."""
    off = g.n
    adj = g.adjacency + tuple(tuple(v + off for v in a) for a in h.adjacency)
    return Graph(adj), off


def complement(g: Graph) -> Graph:
    n = g.n
    adj = []
    for u in range(n):
        own = g._adjsets[u]
        adj.append(tuple(v for v in range(n) if v != u and v not in own))
    return Graph(tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` (renumbered in the given order) and the old ids."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), edges), list(vertices)


def bfs_levels(g: Graph, x: int) -> list[int]:
    """Distance from ``x`` to every vertex; ``UNREACHABLE`` (-1) where there is no path."""
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range")
    level = [UNREACHABLE] * g.n
    level[x] = 0
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if level[w] == UNREACHABLE:
                level[w] = level[u] + 1
                queue.append(w)
    return level


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_levels(g, 0)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_levels(g, s)) if d != UNREACHABLE]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def eccentricity(g: Graph, x: int) -> int:
    levels = bfs_levels(g, x)
    if UNREACHABLE in levels:
        raise ValueError("eccentricity is undefined on a disconnected graph")
    return max(levels)


def adjacency_matrix(g: Graph):
    import numpy as np

    mat = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, a in enumerate(g.adjacency):
        mat[u, list(a)] = 1
    return mat


def csr(g: Graph):
    """``(offsets, targets)`` int64 arrays in compressed-row form."""
    import numpy as np

    offsets = np.zeros(g.n + 1, dtype=np.int64)
    for u, a in enumerate(g.adjacency):
        offsets[u + 1] = offsets[u] + len(a)
    targets = np.fromiter(
        (v for a in g.adjacency for v in a), dtype=np.int64, count=int(offsets[-1])
    )
    return offsets, targets
