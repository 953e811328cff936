# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: color-refinement rounds and pebble-game survival rounds.

Mirrors ``coverdepth._pykernels`` exactly (same inputs, same outputs).
"""

import numpy as np

from libc.stdint cimport int64_t, uint8_t
from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memset

# comparator state for qsort; refine_round is not reentrant
cdef int64_t *_key_off
cdef int64_t *_key_dat
cdef const int64_t *_old


cdef int _cmp_i64(const void *a, const void *b) noexcept nogil:
    cdef int64_t x = (<int64_t *> a)[0]
    cdef int64_t y = (<int64_t *> b)[0]
    return (x > y) - (x < y)


cdef int _cmp_signature(const void *a, const void *b) noexcept nogil:
    cdef int64_t i = (<int64_t *> a)[0]
    cdef int64_t j = (<int64_t *> b)[0]
    cdef int64_t li, lj, lim, k, x, y
    if _old[i] != _old[j]:
        return -1 if _old[i] < _old[j] else 1
    li = _key_off[i + 1] - _key_off[i]
    lj = _key_off[j + 1] - _key_off[j]
    lim = li if li < lj else lj
    for k in range(lim):
        x = _key_dat[_key_off[i] + k]
        y = _key_dat[_key_off[j] + k]
        if x != y:
            return -1 if x < y else 1
    return (li > lj) - (li < lj)


def refine_round(const int64_t[:] offsets, const int64_t[:] targets, const int64_t[:] colors):
    """One color-refinement round with canonical (sorted-signature) ids.

    Returns ``(new_colors, class_count)``.
    """
    global _key_off, _key_dat, _old
    cdef Py_ssize_t n = colors.shape[0]
    cdef Py_ssize_t total = targets.shape[0]
    cdef Py_ssize_t u, k
    cdef int64_t rank = 0
    new = np.zeros(n, dtype=np.int64)
    cdef int64_t[:] out = new
    if n == 0:
        return new, 0
    cdef int64_t *off = <int64_t *> malloc((n + 1) * sizeof(int64_t))
    cdef int64_t *dat = <int64_t *> malloc((total + 1) * sizeof(int64_t))
    cdef int64_t *order = <int64_t *> malloc(n * sizeof(int64_t))
    if off == NULL or dat == NULL or order == NULL:
        free(off); free(dat); free(order)
        raise MemoryError()
    try:
        for u in range(n + 1):
            off[u] = offsets[u]
        for k in range(total):
            dat[k] = colors[targets[k]]
        for u in range(n):
            qsort(&dat[off[u]], off[u + 1] - off[u], sizeof(int64_t), _cmp_i64)
            order[u] = u
        _key_off = off
        _key_dat = dat
        _old = &colors[0]
        qsort(order, n, sizeof(int64_t), _cmp_signature)
        out[order[0]] = 0
        for k in range(1, n):
            if _cmp_signature(&order[k - 1], &order[k]) != 0:
                rank += 1
            out[order[k]] = rank
    finally:
        free(off)
        free(dat)
        free(order)
        _key_off = NULL
        _key_dat = NULL
        _old = NULL
    return new, int(rank + 1)


cdef bint _augment(int a, int n, const uint8_t *allowed, int *match_r, uint8_t *seen) noexcept nogil:
    cdef int b
    for b in range(n):
        if allowed[a * n + b] and not seen[b]:
            seen[b] = 1
            if match_r[b] < 0 or _augment(match_r[b], n, allowed, match_r, seen):
                match_r[b] = a
                return 1
    return 0


cdef bint _perfect(int n, const uint8_t *allowed, int *match_r, uint8_t *seen, uint8_t *row_any) noexcept nogil:
    cdef int a, b
    memset(row_any, 0, n)
    for a in range(n):
        for b in range(n):
            if allowed[a * n + b]:
                row_any[b] = 1
    for b in range(n):
        if not row_any[b]:
            return 0
    for b in range(n):
        match_r[b] = -1
    for a in range(n):
        memset(seen, 0, n)
        if not _augment(a, n, allowed, match_r, seen):
            return 0
    return 1


def survival_round(const uint8_t[:, :] adj_g, const uint8_t[:, :] adj_h, const uint8_t[:] alive):
    """Advance the single-pair survival vector by one round.

    A pair ``q`` stays alive iff it was alive and the pairs that are alive and
    consistent with ``q`` admit a perfect matching between V(G) and V(H).
    """
    cdef int ng = adj_g.shape[0]
    cdef int nh = adj_h.shape[0]
    cdef int q, u, v, a, b
    result = np.zeros(ng * nh, dtype=np.uint8)
    cdef uint8_t[:] out = result
    if ng != nh or ng == 0:
        return result
    cdef int n = ng
    cdef uint8_t *allowed = <uint8_t *> malloc(n * n)
    cdef int *match_r = <int *> malloc(n * sizeof(int))
    cdef uint8_t *seen = <uint8_t *> malloc(n)
    cdef uint8_t *row_any = <uint8_t *> malloc(n)
    try:
        with nogil:
            for q in range(n * n):
                if not alive[q]:
                    continue
                u = q // n
                v = q % n
                for a in range(n):
                    for b in range(n):
                        allowed[a * n + b] = (
                            alive[a * n + b]
                            and ((a == u) == (b == v))
                            and adj_g[a, u] == adj_h[b, v]
                        )
                if _perfect(n, allowed, match_r, seen, row_any):
                    out[q] = 1
    finally:
        free(allowed)
        free(match_r)
        free(seen)
        free(row_any)
    return result


def perfect_matching_exists(allowed_in) -> bool:
    arr = np.ascontiguousarray(np.asarray(allowed_in, dtype=np.uint8))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        return False
    cdef int n = arr.shape[0]
    if n == 0:
        return True
    cdef const uint8_t[:, ::1] view = arr
    cdef int *match_r = <int *> malloc(n * sizeof(int))
    cdef uint8_t *seen = <uint8_t *> malloc(n)
    cdef uint8_t *row_any = <uint8_t *> malloc(n)
    cdef bint ok
    try:
        ok = _perfect(n, &view[0, 0], match_r, seen, row_any)
    finally:
        free(match_r)
        free(seen)
        free(row_any)
    return bool(ok)
