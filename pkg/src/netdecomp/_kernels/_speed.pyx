# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled graph kernels. Mirrors ``pure.py`` exactly; see that module
for the contracts. Keep the two implementations in lockstep."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

NAME = "compiled"


def bfs(cnp.int32_t[::1] indptr, cnp.int32_t[::1] indices, sources,
        int cap=-1, mask=None):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef cnp.int32_t[::1] src = np.ascontiguousarray(sources, dtype=np.int32)
    cdef cnp.uint8_t[::1] msk
    cdef bint masked = mask is not None
    if masked:
        msk = mask
    cdef Py_ssize_t head = 0, tail = 0, i, j
    cdef int u, v, du
    for i in range(src.shape[0]):
        u = src[i]
        if dist[u] < 0:
            dist[u] = 0
            queue[tail] = u
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if cap >= 0 and du >= cap:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] >= 0:
                continue
            if masked and msk[v] == 0:
                continue
            dist[v] = du + 1
            queue[tail] = v
            tail += 1
    return dist_arr


def propose_scan(cnp.int32_t[::1] indptr, cnp.int32_t[::1] indices,
                 cnp.uint8_t[::1] red_mask, cnp.int64_t[::1] blue_label,
                 cnp.uint8_t[::1] alive_blue):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    target_arr = np.full(n, -1, dtype=np.int64)
    parent_arr = np.full(n, -1, dtype=np.int32)
    has_blue_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.int64_t[::1] target = target_arr
    cdef cnp.int32_t[::1] parent = parent_arr
    cdef cnp.uint8_t[::1] has_blue = has_blue_arr
    cdef Py_ssize_t u, j
    cdef int v, best_v
    cdef cnp.int64_t best, lab
    cdef bint seen_blue
    for u in range(n):
        if red_mask[u] == 0:
            continue
        best = -1
        best_v = -1
        seen_blue = False
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if alive_blue[v]:
                seen_blue = True
            lab = blue_label[v]
            if lab >= 0 and (best < 0 or lab < best):
                best = lab
                best_v = v
        if seen_blue:
            has_blue[u] = 1
        if best >= 0:
            target[u] = best
            parent[u] = best_v
    return target_arr, parent_arr, has_blue_arr
