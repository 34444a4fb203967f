# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same contracts."""

import numpy as np
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def loop_counts(slots, int n_arcs):
    cdef int[:, ::1] s = np.ascontiguousarray(slots, dtype=np.int32)
    cdef int n = s.shape[0]
    cdef long n_states = 1 << n
    out_arr = np.empty(n_states, dtype=np.int32)
    cdef int[::1] out = out_arr
    cdef int* parent = <int*> malloc(max(n_arcs, 1) * sizeof(int))
    cdef long state
    cdef int i, j, loops, rx, ry, x0, y0, x1, y1
    try:
        with nogil:
            for state in range(n_states):
                for j in range(n_arcs):
                    parent[j] = j
                loops = n_arcs
                for i in range(n):
                    if (state >> i) & 1:
                        x0 = s[i, 0]; y0 = s[i, 3]; x1 = s[i, 1]; y1 = s[i, 2]
                    else:
                        x0 = s[i, 0]; y0 = s[i, 1]; x1 = s[i, 2]; y1 = s[i, 3]
                    rx = _find(parent, x0); ry = _find(parent, y0)
                    if rx != ry:
                        parent[rx] = ry
                        loops -= 1
                    rx = _find(parent, x1); ry = _find(parent, y1)
                    if rx != ry:
                        parent[rx] = ry
                        loops -= 1
                out[state] = loops
    finally:
        free(parent)
    return out_arr


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _lowbit(uint64_t x) nogil:
    cdef int i = 0
    while not ((x >> i) & 1):
        i += 1
    return i


def longest_cycle(int n, adjacency, int stop_at):
    if n > 64:
        raise ValueError("compiled longest_cycle supports at most 64 vertices")
    cdef uint64_t adj[64]
    cdef int path[65]
    cdef uint64_t cand[65]
    cdef int best_path[65]
    cdef int i, s, v, w, u, depth, best_len = 0, limit
    cdef uint64_t allowed, visited, reach, frontier, nb, fr
    for i in range(n):
        adj[i] = <uint64_t> int(adjacency[i])
    limit = stop_at if stop_at > 0 else n + 1
    with nogil:
        for s in range(n):
            allowed = 0
            for v in range(s + 1, n):
                allowed |= (<uint64_t> 1) << v
            if _popcount(allowed) + 1 <= best_len:
                break
            depth = 1
            path[0] = s
            cand[0] = adj[s] & allowed
            visited = (<uint64_t> 1) << s
            while depth > 0:
                v = path[depth - 1]
                if depth >= 3 and ((adj[v] >> s) & 1) and depth > best_len:
                    best_len = depth
                    for i in range(depth):
                        best_path[i] = path[i]
                    if best_len >= limit:
                        break
                if cand[depth - 1] == 0:
                    depth -= 1
                    visited &= ~((<uint64_t> 1) << v)
                    continue
                w = _lowbit(cand[depth - 1])
                cand[depth - 1] &= ~((<uint64_t> 1) << w)
                fr = allowed & ~visited & ~((<uint64_t> 1) << w)
                reach = (<uint64_t> 1) << w
                frontier = reach
                while frontier:
                    u = _lowbit(frontier)
                    frontier &= frontier - 1
                    nb = adj[u] & fr & ~reach
                    reach |= nb
                    frontier |= nb
                if depth + _popcount(reach) <= best_len:
                    continue
                path[depth] = w
                visited |= (<uint64_t> 1) << w
                cand[depth] = adj[w] & allowed & ~visited
                depth += 1
            if best_len >= limit:
                break
    return best_len, [best_path[i] for i in range(best_len)]


def min_code(sigma, bint mirror):
    cdef int n = len(sigma)
    if n == 0:
        return ()
    cdef int* sig = <int*> malloc(n * sizeof(int))
    cdef int* label = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* code = <int*> malloc(2 * n * sizeof(int))
    cdef int* best = <int*> malloc(2 * n * sizeof(int))
    cdef int d, root, i, head, tail, k, nxt, val, j
    cdef bint have_best = False, smaller, aborted
    try:
        for d in range(n):
            if mirror:
                sig[<int> sigma[d]] = d
            else:
                sig[d] = <int> sigma[d]
        with nogil:
            for root in range(n):
                for d in range(n):
                    label[d] = -1
                label[root] = 0
                order[0] = root
                tail = 1
                head = 0
                k = 0
                smaller = not have_best
                aborted = False
                while head < tail and not aborted:
                    d = order[head]
                    for j in range(2):
                        if j == 0:
                            nxt = sig[d]
                        else:
                            nxt = d ^ 1
                        if label[nxt] < 0:
                            label[nxt] = tail
                            order[tail] = nxt
                            tail += 1
                        val = label[nxt]
                        if not smaller:
                            if val > best[k]:
                                aborted = True
                                break
                            if val < best[k]:
                                smaller = True
                        code[k] = val
                        k += 1
                    head += 1
                if aborted or not smaller:
                    continue
                for i in range(k):
                    best[i] = code[i]
                have_best = True
        return tuple([best[i] for i in range(2 * n)])
    finally:
        free(sig); free(label); free(order); free(code); free(best)
