"""Exact linear-forest analysis and bipartite matching.

The largest linear-forest subgraph is found by subset dynamic programming:
a Hamiltonian-path table over vertex subsets, then a minimum path-cover DP.
lf(G) = n - (fewest vertex-disjoint paths covering V). Cost is O(3^n), so the
exact computation is capped (default n <= 16) and refuses larger hosts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from . import _kernels
from .graph import BipartiteGraph, Edge, Graph, _bits

EXACT_CAP = 16


class OracleCapError(ValueError):
    """Instance too large for the exact oracle."""


@dataclass(frozen=True)
class LinearForestStats:
    lf: int
    witness: Optional[Tuple[Edge, ...]] = None


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.rows, dtype=np.int64)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OracleCapError(f"instance too large for exact oracle: n={n} > cap={cap}")


def is_linear_forest(g: Graph) -> bool:
    if any(bin(r).count("1") > 2 for r in g.rows):
        return False
    # max degree 2: acyclic iff every component has one fewer edge than vertices
    seen = 0
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        verts = list(_bits(comp))
        edges = sum(bin(g.rows[v]).count("1") for v in verts) // 2
        if edges != len(verts) - 1:
            return False
    return True


def forest_edges(g: Graph, cap: int = EXACT_CAP) -> int:
    """lf(g) without witness."""
    _check_cap(g.n, cap)
    return int(_kernels.max_forest_edges(_adj_array(g), g.n))


def max_linear_forest(g: Graph, cap: int = EXACT_CAP) -> LinearForestStats:
    _check_cap(g.n, cap)
    if g.n == 0:
        return LinearForestStats(0, ())
    adj = _adj_array(g)
    ends = _kernels.path_ends(adj, g.n)
    cover = _kernels.min_pieces(ends, g.n)
    full = (1 << g.n) - 1
    edges: list[Edge] = []
    T = full
    while T:
        low = T & -T
        rest = T ^ low
        sub = 0
        while True:  # ascending submasks: smallest-label piece first
            S = sub | low
            if ends[S] and 1 + cover[T ^ S] == cover[T]:
                break
            sub = (sub - rest) & rest
        edges.extend(_hamiltonian_path_edges(g.rows, ends, S))
        T ^= S
    edges.sort()
    return LinearForestStats(g.n - int(cover[full]), tuple(edges))


def _hamiltonian_path_edges(rows, ends, S: int) -> list[Edge]:
    v = (int(ends[S]) & -int(ends[S])).bit_length() - 1
    path = [v]
    R = S
    while R != 1 << v:
        R ^= 1 << v
        cand = int(ends[R]) & rows[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    return [(min(a, b) + 1, max(a, b) + 1) for a, b in zip(path, path[1:])]


def is_lnk_free(g: Graph, k: int, cap: int = EXACT_CAP) -> bool:
    """True iff g has no linear-forest subgraph with k edges."""
    if k < 1:
        raise ValueError("edge budget k must be >= 1")
    return forest_edges(g, cap) <= k - 1


class BipartiteCover(NamedTuple):
    x: frozenset
    y: frozenset

    def __len__(self):
        return len(self.x) + len(self.y)


def _max_matching(bg: BipartiteGraph) -> list[int]:
    """match_y[j] = matched X index of y_{j+1}, or -1 (Kuhn's augmenting paths)."""
    match_y = [-1] * bg.ny

    def augment(x: int, visited: list[bool]) -> bool:
        for y in _bits(bg.rows[x]):
            if visited[y]:
                continue
            visited[y] = True
            if match_y[y] < 0 or augment(match_y[y], visited):
                match_y[y] = x
                return True
        return False

    for x in range(bg.nx):
        augment(x, [False] * bg.ny)
    return match_y


def matching_number(bg: BipartiteGraph) -> int:
    return sum(1 for x in _max_matching(bg) if x >= 0)


def min_vertex_cover_bipartite(bg: BipartiteGraph) -> BipartiteCover:
    """König construction: with Z the vertices reachable from unmatched X
    vertices by alternating paths, the cover is (X - Z) + (Y & Z)."""
    match_y = _max_matching(bg)
    matched_x = {x for x in match_y if x >= 0}
    match_x = {x: y for y, x in enumerate(match_y) if x >= 0}
    zx = {x for x in range(bg.nx) if x not in matched_x}
    zy: set[int] = set()
    stack = list(zx)
    while stack:
        x = stack.pop()
        for y in _bits(bg.rows[x]):
            if y in zy or match_x.get(x) == y:
                continue
            zy.add(y)
            x2 = match_y[y]
            if x2 >= 0 and x2 not in zx:
                zx.add(x2)
                stack.append(x2)
    cover_x = frozenset(x + 1 for x in range(bg.nx) if x not in zx)
    cover_y = frozenset(y + 1 for y in zy)
    return BipartiteCover(cover_x, cover_y)
