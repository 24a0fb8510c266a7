"""Copy counts N(G, T) for cliques, clique-stars and bicliques.

Clique-stars K*_{s,t} are counted as ordered pairs (W1, W2): W1 an s-clique,
W2 any t-set of common neighbours of W1. Bicliques on equal-part hosts count
(S in X, T in Y) pairs; for s != t both orientations are summed.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .graph import BipartiteGraph, Graph, _bits

KINDS = ("clique", "clique-star", "biclique")


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    s: int
    t: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.s < 1:
            raise ValueError("pattern size s must be >= 1")
        if self.kind != "clique" and self.t < 1:
            raise ValueError(f"{self.kind} needs t >= 1")

    def count(self, host) -> int:
        if self.kind == "clique":
            return count_cliques(host, self.s)
        if self.kind == "clique-star":
            return count_clique_stars(host, self.s, self.t)
        return count_bicliques(host, self.s, self.t)

    def __str__(self):
        if self.kind == "clique":
            return f"K{self.s}"
        if self.kind == "clique-star":
            return f"K*{self.s},{self.t}"
        return f"K{self.s},{self.t}"


def _cliques(rows, s: int) -> Iterator[int]:
    """Common-neighbourhood masks of every s-clique (lowest-label pivot)."""
    n = len(rows)
    full = (1 << n) - 1

    def rec(size: int, cand: int, common: int):
        if size == s:
            yield common
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(size + 1, cand & rows[v], common & rows[v])

    yield from rec(0, full, full)


def count_cliques(g: Graph, s: int) -> int:
    if s < 1:
        raise ValueError("clique size must be >= 1")
    if s > g.n:
        return 0
    return sum(1 for _ in _cliques(g.rows, s))


def count_clique_stars(g: Graph, s: int, t: int) -> int:
    if s < 1 or t < 1:
        raise ValueError("clique-star needs s, t >= 1")
    if s + t > g.n:
        return 0
    return sum(comb(bin(common).count("1"), t) for common in _cliques(g.rows, s))


def _one_side(rows, n_other: int, a: int, b: int) -> int:
    """Pairs (S, T): S an a-subset of the row side, T a b-subset of the
    common neighbourhood of S on the other side."""
    full = (1 << n_other) - 1

    def rec(start: int, size: int, common: int) -> int:
        if size == a:
            return comb(bin(common).count("1"), b)
        total = 0
        for i in range(start, len(rows) - (a - size) + 1):
            c = common & rows[i]
            if c or b == 0:
                total += rec(i + 1, size + 1, c)
        return total

    return rec(0, 0, full)


def count_bicliques(bg: BipartiteGraph, s: int, t: int) -> int:
    if s < 1 or t < 1:
        raise ValueError("biclique needs s, t >= 1")
    if bg.nx != bg.ny:
        raise ValueError("biclique counting is defined on equal parts")
    total = _one_side(bg.rows, bg.ny, s, t)
    if s != t:
        total += _one_side(bg.rows, bg.ny, t, s)
    return total


def count_bicliques_oriented(bg: BipartiteGraph, a: int, b: int) -> int:
    """Pairs with |S| = a on the X side and |T| = b on the Y side only."""
    return _one_side(bg.rows, bg.ny, a, b)
