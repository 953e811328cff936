"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; selected by
:mod:`coverdepth.kernels` when the extension is unavailable.
"""

from __future__ import annotations

import numpy as np

from coverdepth.matching import has_perfect_matching


def refine_round(offsets, targets, colors):
    """One color-refinement round with canonical (sorted-signature) ids.

    Returns ``(new_colors, class_count)``.
    """
    off = offsets.tolist()
    tgt = targets.tolist()
    col = colors.tolist()
    sigs = []
    for u in range(len(col)):
        sigs.append((col[u], tuple(sorted(col[w] for w in tgt[off[u] : off[u + 1]]))))
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return np.array([rank[s] for s in sigs], dtype=np.int64), len(rank)


def consistency_mask(adj_g, adj_h, u: int, v: int):
    """Boolean ``(nG, nH)`` mask of pairs ``(a, b)`` consistent with the pebbled pair ``(u, v)``."""
    eq = (np.arange(adj_g.shape[0]) == u)[:, None] == (np.arange(adj_h.shape[0]) == v)[None, :]
    same_adj = adj_g[:, u][:, None] == adj_h[:, v][None, :]
    return eq & same_adj


def survival_round(adj_g, adj_h, alive):
    """Advance the single-pair survival vector by one round.

    ``alive`` is a flat ``uint8`` vector over pairs ``(a, b)`` (index ``a*nH + b``).
    A pair ``q`` stays alive iff it was alive and the pairs that are alive and
    consistent with ``q`` admit a perfect matching between V(G) and V(H).
    """
    ng, nh = adj_g.shape[0], adj_h.shape[0]
    cur = alive.reshape(ng, nh).astype(bool)
    out = np.zeros(ng * nh, dtype=np.uint8)
    if ng != nh:
        return out
    for q in np.flatnonzero(alive):
        u, v = divmod(int(q), nh)
        allowed = cur & consistency_mask(adj_g, adj_h, u, v)
        rows = [np.flatnonzero(allowed[a]).tolist() for a in range(ng)]
        if has_perfect_matching(rows, nh):
            out[q] = 1
    return out


def perfect_matching_exists(allowed) -> bool:
    allowed = np.asarray(allowed, dtype=bool)
    rows = [np.flatnonzero(r).tolist() for r in allowed]
    return has_perfect_matching(rows, allowed.shape[1])
