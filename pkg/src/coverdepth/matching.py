"""Maximum bipartite matching by Hopcroft-Karp.

Left vertices are ``0..len(adj)-1``; ``adj[i]`` lists the right vertices in
``0..n_right-1`` joined to ``i``.  Iteration is over lists only, so results are
deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

_INF = 1 << 30


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[int, list[int]]:
    """Return ``(size, match_left)`` where ``match_left[i]`` is ``-1`` if unmatched."""
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    # greedy warm start
    size = 0
    for i in range(n_left):
        for j in adj[i]:
            if match_r[j] == -1:
                match_l[i] = j
                match_r[j] = i
                size += 1
                break

    def bfs() -> bool:
        queue = deque()
        for i in range(n_left):
            if match_l[i] == -1:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = _INF
        found = False
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                k = match_r[j]
                if k == -1:
                    found = True
                elif dist[k] == _INF:
                    dist[k] = dist[i] + 1
                    queue.append(k)
        return found

    def dfs(i: int) -> bool:
        # recursion depth is bounded by n_left
        for j in adj[i]:
            k = match_r[j]
            if k == -1 or (dist[k] == dist[i] + 1 and dfs(k)):
                match_l[i] = j
                match_r[j] = i
                return True
        dist[i] = _INF
        return False

    while bfs():
        for i in range(n_left):
            if match_l[i] == -1 and dfs(i):
                size += 1
    return size, match_l


def has_perfect_matching(adj: Sequence[Sequence[int]], n_right: int) -> bool:
    n_left = len(adj)
    if n_left != n_right:
        return False
    if any(not a for a in adj):
        return False
    covered = set()
    for a in adj:
        covered.update(a)
    if len(covered) < n_right:
        return False
    return hopcroft_karp(adj, n_right)[0] == n_left
