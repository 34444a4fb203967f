"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels.pyx`` must agree with them
bit for bit. See ``leadsto.kernels`` for backend selection.
"""

import numpy as np


def loop_counts(slots, n_arcs):
    """Number of closed loops for every full smoothing state.

    ``slots`` is an ``(n, 4)`` integer array of 0-based arc indices in
    counterclockwise order. Bit ``i`` of a state selects the smoothing at
    crossing ``i``: 0 pairs slots (0,1),(2,3); 1 pairs slots (0,3),(1,2).
    """
    slots = np.asarray(slots, dtype=np.int32)
    n = slots.shape[0]
    rows = [tuple(int(x) for x in row) for row in slots]
    out = np.empty(1 << n, dtype=np.int32)
    for state in range(1 << n):
        parent = list(range(n_arcs))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = n_arcs
        for i, (a, b, c, d) in enumerate(rows):
            if (state >> i) & 1:
                pairs = ((a, d), (b, c))
            else:
                pairs = ((a, b), (c, d))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        out[state] = loops
    return out


def _popcount(x):
    return bin(x).count("1")


def longest_cycle(n, adjacency, stop_at):
    """Longest simple cycle (length >= 3) of a simple graph.

    ``adjacency[v]`` is a bitmask of neighbours. Returns ``(length, vertices)``
    with ``length == 0`` when the graph has no cycle of length >= 3. The
    search stops early once a cycle of length ``>= stop_at`` is found
    (``stop_at <= 0`` means exhaustive).
    """
    adj = [int(a) for a in adjacency]
    best_len = 0
    best_path = []
    limit = stop_at if stop_at > 0 else n + 1

    for s in range(n):
        allowed_base = 0
        for v in range(s + 1, n):
            allowed_base |= 1 << v
        if _popcount(allowed_base) + 1 <= best_len:
            break
        path = [s]
        stack = [(s, adj[s] & allowed_base)]
        visited = 1 << s
        while stack:
            v, cand = stack[-1]
            if len(path) >= 3 and (adj[v] >> s) & 1 and len(path) > best_len:
                best_len = len(path)
                best_path = list(path)
                if best_len >= limit:
                    return best_len, best_path
            if cand == 0:
                stack.pop()
                path.pop()
                visited &= ~(1 << v)
                continue
            w = (cand & -cand).bit_length() - 1
            stack[-1] = (v, cand & ~(1 << w))
            free = allowed_base & ~visited & ~(1 << w)
            # vertices still reachable from w bound the cycle length
            reach = 1 << w
            frontier = reach
            while frontier:
                u = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nb = adj[u] & free & ~reach
                reach |= nb
                frontier |= nb
            if len(path) + _popcount(reach) <= best_len:
                continue
            path.append(w)
            visited |= 1 << w
            stack.append((w, adj[w] & allowed_base & ~visited))
    return best_len, best_path


def _code_from_root(sigma, root, n_darts, best):
    label = [-1] * n_darts
    order = [root]
    label[root] = 0
    code = []
    i = 0
    smaller = best is None
    while i < len(order):
        d = order[i]
        for nxt in (sigma[d], d ^ 1):
            if label[nxt] < 0:
                label[nxt] = len(order)
                order.append(nxt)
            val = label[nxt]
            if not smaller:
                ref = best[len(code)]
                if val > ref:
                    return None
                if val < ref:
                    smaller = True
            code.append(val)
        i += 1
    if not smaller:
        return None
    return code


def min_code(sigma, mirror):
    """Lexicographically least BFS code of a connected combinatorial map.

    Darts ``2e`` and ``2e+1`` are the two ends of edge ``e``; ``sigma`` is
    the rotation permutation. With ``mirror`` the inverse rotation is used.
    """
    n_darts = len(sigma)
    sig = [int(x) for x in sigma]
    if mirror:
        inv = [0] * n_darts
        for d, e in enumerate(sig):
            inv[e] = d
        sig = inv
    best = None
    for root in range(n_darts):
        code = _code_from_root(sig, root, n_darts, best)
        if code is not None:
            best = code
    return tuple(best) if best is not None else ()
