"""Color refinement (1-WL) with canonical color ids.

Round ``i+1`` assigns each vertex the signature ``(C^i(u), sorted neighbor
colors)``; the distinct signatures are sorted and ranked, so ids are dense and
their order follows the signature order.  Colorings of different graphs are
only comparable when computed together, see :func:`joint_refinement`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from coverdepth import kernels
from coverdepth.graph import Graph, csr, disjoint_union


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    class_count: int

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class RefinementHistory:
    """Colorings ``C^0 .. C^{stab+1}``; later rounds repeat the last one."""

    rounds: tuple[Coloring, ...]
    stab: int
    graph_size: int

    def coloring(self, i: int) -> Coloring:
        if i < 0:
            raise ValueError("round index must be non-negative")
        return self.rounds[min(i, len(self.rounds) - 1)]

    def colors(self, i: int) -> tuple[int, ...]:
        return self.coloring(i).colors

    def class_counts(self, upto: int | None = None) -> list[int]:
        last = len(self.rounds) - 1 if upto is None else upto
        return [self.coloring(i).class_count for i in range(last + 1)]

    @property
    def stable(self) -> Coloring:
        return self.rounds[self.stab]


def _check_coloring(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ValueError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")


def uniform_coloring(g: Graph) -> Coloring:
    return Coloring((0,) * g.n, 1 if g.n else 0)


def refine_step(g: Graph, c: Coloring, *, _csr=None) -> Coloring:
    _check_coloring(g, c)
    if g.n == 0:
        return Coloring((), 0)
    offsets, targets = _csr if _csr is not None else csr(g)
    new, count = kernels.refine_round(offsets, targets, np.asarray(c.colors, dtype=np.int64))
    return Coloring(tuple(new.tolist()), count)


def run_refinement(g: Graph, initial: Coloring | None = None) -> RefinementHistory:
    """Refine until the partition repeats.

    ``initial`` defaults to the uniform coloring; a supplied one must already
    have canonical dense ids.
    """
    c = uniform_coloring(g) if initial is None else initial
    _check_coloring(g, c)
    if g.n == 0:
        return RefinementHistory((c, c), 0, 0)
    graph_csr = csr(g)
    rounds = [c]
    while True:
        nxt = refine_step(g, rounds[-1], _csr=graph_csr)
        rounds.append(nxt)
        # C^{i+1} refines C^i, so equal class counts mean equal partitions
        if nxt.class_count == rounds[-2].class_count:
            break
    return RefinementHistory(tuple(rounds), len(rounds) - 2, g.n)


def stab(g: Graph) -> int:
    return run_refinement(g).stab


def _distinct_count(colors: tuple[int, ...], lo: int, hi: int) -> int:
    return len(set(colors[lo:hi]))


@dataclass(frozen=True)
class JointRefinement:
    """Refinement of ``G ∪ H`` with per-side views of the shared color ids."""

    history: RefinementHistory
    n_g: int
    n_h: int
    stab_g: int = field(init=False)
    stab_h: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "stab_g", self._restricted_stab(0, self.n_g))
        object.__setattr__(self, "stab_h", self._restricted_stab(self.n_g, self.n_g + self.n_h))

    @property
    def offset(self) -> int:
        return self.n_g

    @property
    def stab(self) -> int:
        return self.history.stab

    def _restricted_stab(self, lo: int, hi: int) -> int:
        i = 0
        while True:
            a = _distinct_count(self.history.colors(i), lo, hi)
            b = _distinct_count(self.history.colors(i + 1), lo, hi)
            if a == b:
                return i
            i += 1

    def colors_g(self, i: int) -> tuple[int, ...]:
        return self.history.colors(i)[: self.n_g]

    def colors_h(self, i: int) -> tuple[int, ...]:
        return self.history.colors(i)[self.n_g :]

    def color_g(self, i: int, u: int) -> int:
        return self.history.colors(i)[u]

    def color_h(self, i: int, v: int) -> int:
        return self.history.colors(i)[self.n_g + v]

    def color_set_g(self, i: int) -> frozenset[int]:
        return frozenset(self.colors_g(i))

    def color_set_h(self, i: int) -> frozenset[int]:
        return frozenset(self.colors_h(i))

    def first_split(self, u: int, v: int) -> int | None:
        """Least ``i`` with ``C^i(u) != C^i(v)`` (u in G, v in H), or None if never."""
        for i in range(self.stab + 1):
            if self.color_g(i, u) != self.color_h(i, v):
                return i
        return None


def joint_refinement(g: Graph, h: Graph) -> JointRefinement:
    union, _ = disjoint_union(g, h)
    return JointRefinement(run_refinement(union), g.n, h.n)


@dataclass(frozen=True)
class DegreeRefinementMatrix:
    """``matrix[c][c2]`` = neighbors of color ``c2`` around any vertex of stable color ``c``."""

    matrix: tuple[tuple[int, ...], ...]
    coloring: Coloring


def degree_refinement_matrix(g: Graph) -> DegreeRefinementMatrix:
    stable = run_refinement(g).stable
    k = stable.class_count
    rows: list[tuple[int, ...] | None] = [None] * k
    for u in range(g.n):
        c = stable.colors[u]
        if rows[c] is not None:
            continue
        counts = [0] * k
        for w in g.adjacency[u]:
            counts[stable.colors[w]] += 1
        rows[c] = tuple(counts)
    return DegreeRefinementMatrix(tuple(rows), stable)  # type: ignore[arg-type]


def is_equitable(g: Graph, colors: tuple[int, ...]) -> bool:
    """Direct check: same-colored vertices have equal neighbor counts into every class."""
    profile: dict[int, dict[int, int]] = {}
    for u in range(g.n):
        counts: dict[int, int] = {}
        for w in g.adjacency[u]:
            counts[colors[w]] = counts.get(colors[w], 0) + 1
        prev = profile.setdefault(colors[u], counts)
        if prev != counts:
            return False
    return True
