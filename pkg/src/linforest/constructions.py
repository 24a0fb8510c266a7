"""Extremal constructions. Cliques and hubs always sit on the lowest labels so
that every construction is a shifted graph verbatim."""
from __future__ import annotations

from .graph import BipartiteGraph, Graph, complete_graph, disjoint_union, empty_graph, join


def ceil_half(a: int) -> int:
    return -(-a // 2)


def build_H(n: int, k: int, m: int) -> Graph:
    """Clique on [m]; labels [k-m] additionally joined to every label in m+1..n."""
    if not ceil_half(k + 1) <= m <= k <= n:
        raise ValueError(f"H(n,k,m) needs ceil((k+1)/2) <= m <= k <= n, got n={n}, k={k}, m={m}")
    clique = (1 << m) - 1
    hubs = (1 << (k - m)) - 1
    outside = ((1 << n) - 1) & ~clique
    rows = []
    for v in range(n):
        if v < m:
            r = clique & ~(1 << v)
            if v < k - m:
                r |= outside
        else:
            r = hubs
        rows.append(r)
    return Graph(n, tuple(rows))


def build_extremal_unrestricted(n: int, k: int, variant: str) -> Graph:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if variant == "clique":
        return disjoint_union(complete_graph(k), empty_graph(n - k))
    if variant != "dominating":
        raise ValueError(f"unknown variant {variant!r}")
    if k % 2:
        h = (k - 1) // 2
        return join(_complete_or_empty(h), empty_graph(n - h))
    h = k // 2 - 1
    return join(_complete_or_empty(h), disjoint_union(complete_graph(2), empty_graph(n - h - 2)))


def _complete_or_empty(h: int) -> Graph:
    return complete_graph(h) if h else empty_graph(0)


def build_extremal_bipartite(n: int, k: int) -> BipartiteGraph:
    """Odd k: (k-1)/2 X-vertices joined to all of Y. Even k: k/2 - 1 X-vertices
    joined to all of Y, and y_1 joined to the remaining n - k/2 + 1 X-vertices."""
    if k < 2 or 2 * n < k + 1 or n < ceil_half(k - 1):
        raise ValueError(f"bipartite construction needs k >= 2, 2n >= k+1, got n={n}, k={k}")
    full = (1 << n) - 1
    if k % 2:
        h = (k - 1) // 2
        return BipartiteGraph(n, n, tuple(full if i < h else 0 for i in range(n)))
    h = k // 2 - 1
    return BipartiteGraph(n, n, tuple(full if i < h else 1 for i in range(n)))


def build_Gstar(n: int, kceil: int, x: int) -> BipartiteGraph:
    """X1 = first x X-vertices, Y1 = first kceil - x Y-vertices; edges X1*Y and X*Y1."""
    if not 0 <= x <= kceil <= n:
        raise ValueError(f"G* needs 0 <= x <= kceil <= n, got n={n}, kceil={kceil}, x={x}")
    full = (1 << n) - 1
    y1 = (1 << (kceil - x)) - 1
    return BipartiteGraph(n, n, tuple(full if i < x else y1 for i in range(n)))
