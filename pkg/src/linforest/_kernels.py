"""Compiled subset-DP and search kernels.

Graphs here are 0-based int64 adjacency bitrows. All kernels are ``nogil`` so
the oracle can run enumeration subtrees on threads.
"""
import numpy as np
from numba import njit

# cover[T] for T = 0 is 0; anything unreachable stays at this sentinel
_INF = 1 << 30


@njit(cache=True, nogil=True)
def path_ends(adj, n):
    """ends[T] = bitmask of vertices v such that G[T] has a Hamiltonian path ending at v."""
    size = 1 << n
    ends = np.zeros(size, np.int64)
    for T in range(1, size):
        if T & (T - 1) == 0:
            ends[T] = T
            continue
        acc = 0
        for v in range(n):
            bv = np.int64(1) << v
            if T & bv and ends[T ^ bv] & adj[v]:
                acc |= bv
        ends[T] = acc
    return ends


@njit(cache=True, nogil=True)
def min_pieces(ends, n):
    """cover[T] = fewest vertex-disjoint paths covering exactly T."""
    size = 1 << n
    cover = np.full(size, _INF, np.int64)
    cover[0] = 0
    for T in range(1, size):
        low = T & -T
        rest = T ^ low
        best = _INF
        sub = rest
        while True:
            S = sub | low
            if ends[S]:
                c = 1 + cover[T ^ S]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cover[T] = best
    return cover


@njit(cache=True, nogil=True)
def max_forest_edges(adj, n):
    if n == 0:
        return 0
    ends = path_ends(adj, n)
    cover = min_pieces(ends, n)
    return n - cover[(1 << n) - 1]


@njit(cache=True, nogil=True)
def matching_size(adj, n):
    """Maximum matching of a general graph by DP over vertex subsets."""
    size = 1 << n
    best = np.zeros(size, np.int64)
    for S in range(1, size):
        low = S & -S
        v = 0
        while (np.int64(1) << v) != low:
            v += 1
        rest = S ^ low
        b = best[rest]
        nb = adj[v] & rest
        while nb:
            lw = nb & -nb
            nb ^= lw
            c = 1 + best[rest ^ lw]
            if c > b:
                b = c
        best[S] = b
    return best[size - 1]


# admissibility kinds for the search kernel
LINEAR_FOREST = 0
MATCHING = 1


@njit(cache=True, nogil=True)
def _free(adj, n, k, kind):
    if kind == 1:
        return matching_size(adj, n) <= k
    return max_forest_edges(adj, n) <= k - 1


@njit(cache=True, nogil=True)
def search_maximal_free(n, k, kind, us, vs, prefix, prefix_len, limit):
    """DFS over edge slots (us[i], vs[i]) collecting every edge-maximal admissible
    graph. Admissible means lf <= k-1 (kind 0) or matching number <= k (kind 1);
    both are closed under edge deletion, which is what makes pruning sound.

    The first ``prefix_len`` slot decisions are fixed by the bits of ``prefix``
    (bit i set = slot i included). Returns (masks, count, nodes) where masks[:count]
    hold the included-slot bitmasks of the maximal graphs in DFS order (include
    branch before exclude branch). Stops early once ``limit`` results are stored,
    signalled by count == limit.
    """
    m = us.shape[0]
    adj = np.zeros(n, np.int64)
    # state[d]: 0 = fresh, 1 = include branch taken, 2 = exclude branch taken
    state = np.zeros(m + 1, np.int8)
    forced = np.zeros(m, np.bool_)
    out = np.zeros(64, np.int64)
    count = 0
    nodes = 0
    mask = np.int64(0)

    for d in range(prefix_len):
        u = us[d]
        v = vs[d]
        adj[u] |= np.int64(1) << v
        adj[v] |= np.int64(1) << u
        addable = _free(adj, n, k, kind)
        if (prefix >> d) & 1:
            if not addable:
                return out[:0], 0, nodes
            mask |= np.int64(1) << d
        else:
            adj[u] &= ~(np.int64(1) << v)
            adj[v] &= ~(np.int64(1) << u)
            forced[d] = not addable

    d = prefix_len
    while d >= prefix_len:
        if d == m:
            nodes += 1
            maximal = True
            for e in range(m):
                if (mask >> e) & 1 or forced[e]:
                    continue
                u = us[e]
                v = vs[e]
                adj[u] |= np.int64(1) << v
                adj[v] |= np.int64(1) << u
                ok = _free(adj, n, k, kind)
                adj[u] &= ~(np.int64(1) << v)
                adj[v] &= ~(np.int64(1) << u)
                if ok:
                    maximal = False
                    break
            if maximal:
                if count == out.shape[0]:
                    grown = np.zeros(2 * count, np.int64)
                    grown[:count] = out
                    out = grown
                out[count] = mask
                count += 1
                if count >= limit:
                    return out[:count], count, nodes
            d -= 1
            continue
        u = us[d]
        v = vs[d]
        bu = np.int64(1) << u
        bv = np.int64(1) << v
        if state[d] == 0:
            nodes += 1
            state[d] = 1
            adj[u] |= bv
            adj[v] |= bu
            if _free(adj, n, k, kind):
                forced[d] = False
                mask |= np.int64(1) << d
                d += 1
                continue
            adj[u] &= ~bv
            adj[v] &= ~bu
            forced[d] = True
        if state[d] == 1:
            if (mask >> d) & 1:
                mask &= ~(np.int64(1) << d)
                adj[u] &= ~bv
                adj[v] &= ~bu
            state[d] = 2
            d += 1
            continue
        state[d] = 0
        forced[d] = False
        d -= 1
    return out[:count], count, nodes


@njit(cache=True, nogil=True)
def forest_edges_many(n, us, vs, masks):
    """Largest linear-forest size of each slot-mask graph."""
    res = np.zeros(masks.shape[0], np.int64)
    adj = np.zeros(n, np.int64)
    for idx in range(masks.shape[0]):
        adj[:] = 0
        mk = masks[idx]
        for e in range(us.shape[0]):
            if (mk >> e) & 1:
                adj[us[e]] |= np.int64(1) << vs[e]
                adj[vs[e]] |= np.int64(1) << us[e]
        res[idx] = max_forest_edges(adj, n)
    return res
