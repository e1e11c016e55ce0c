"""Pure-Python reference implementations of the hot graph kernels.

These are the fallback used when the compiled extension is unavailable
(or when ``NETDECOMP_PURE=1``). They must produce bit-identical outputs
to the compiled versions in ``_speed.pyx``; the parity is enforced by
``tests/test_kernels.py`` and timed by ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"


def bfs(indptr, indices, sources, cap=-1, mask=None):
    """Multi-source BFS hop distances over a CSR adjacency.

    Returns an int32 array with -1 for unreachable nodes. ``cap >= 0``
    stops the search beyond that depth; ``mask`` (uint8) confines the
    traversal to nodes with a nonzero entry. Sources must lie in the mask.
    """
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    head = 0
    tail = 0
    for s in sources:
        s = int(s)
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    masked = mask is not None
    while head < tail:
        u = int(queue[head])
        head += 1
        du = int(dist[u])
        if cap >= 0 and du >= cap:
            continue
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[j])
            if dist[v] >= 0:
                continue
            if masked and not mask[v]:
                continue
            dist[v] = du + 1
            queue[tail] = v
            tail += 1
    return dist


def propose_scan(indptr, indices, red_mask, blue_label, alive_blue):
    """Per-node adjacency scan used by one growth step of the clustering.

    For every node ``u`` with ``red_mask[u]`` set, inspect its neighbors:

    * ``has_blue[u]`` = 1 when any neighbor is a living blue node
      (``alive_blue``), whether or not its cluster still accepts joins;
    * ``target[u]`` = smallest ``blue_label[v] >= 0`` over neighbors
      (labels of joinable blue clusters), or -1 when none;
    * ``parent[u]`` = smallest neighbor index attaining that label.

    Adjacency rows are sorted, so the first neighbor attaining the
    minimum is the smallest index.
    """
    n = len(indptr) - 1
    target = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int32)
    has_blue = np.zeros(n, dtype=np.uint8)
    for u in range(n):
        if not red_mask[u]:
            continue
        best = -1
        best_v = -1
        seen_blue = False
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[j])
            if alive_blue[v]:
                seen_blue = True
            lab = int(blue_label[v])
            if lab >= 0 and (best < 0 or lab < best):
                best = lab
                best_v = v
        if seen_blue:
            has_blue[u] = 1
        if best >= 0:
            target[u] = best
            parent[u] = best_v
    return target, parent, has_blue
