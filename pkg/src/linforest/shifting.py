"""Kelmans shifting S_ij and shifted graphs."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class ShiftStep:
    i: int
    j: int
    changed: int


def shift(g: Graph, i: int, j: int) -> tuple[Graph, ShiftStep]:
    """Move every edge {j, w} (w != i) to {i, w} unless {i, w} is already an edge."""
    if not 1 <= i < j <= g.n:
        raise ValueError(f"shift needs 1 <= i < j <= n, got i={i}, j={j}, n={g.n}")
    a, b = i - 1, j - 1
    rows = list(g.rows)
    movable = rows[b] & ~rows[a] & ~(1 << a)
    changed = bin(movable).count("1")
    if changed:
        rows[b] &= ~movable
        rows[a] |= movable
        for w in range(g.n):
            if (movable >> w) & 1:
                rows[w] = (rows[w] & ~(1 << b)) | (1 << a)
    return Graph(g.n, tuple(rows)), ShiftStep(i, j, changed)


def is_shifted(g: Graph) -> bool:
    """Edge set is a down-set: for each edge {u, v} and u' < u with u' != v,
    {u', v} is also an edge."""
    for u in range(g.n):
        below = (1 << u) - 1
        for v in range(g.n):
            if (g.rows[u] >> v) & 1:
                need = below & ~(1 << v)
                if g.rows[v] & need != need:
                    return False
    return True


def shift_closure(g: Graph) -> Graph:
    """Sweep (i, j) lexicographically, restarting after any change, until fixed."""
    while True:
        for i in range(1, g.n + 1):
            for j in range(i + 1, g.n + 1):
                g2, step = shift(g, i, j)
                if step.changed:
                    g = g2
                    break
            else:
                continue
            break
        else:
            return g


def shifted_graphs(n: int):
    """Every shifted graph on [n], as down-sets of the pair dominance order.

    Pairs are decided in lexicographic order (a linear extension), and a pair
    may be included only if its lower covers {i-1, j} and {i, j-1} are.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: t for t, p in enumerate(pairs)}

    def rec(t: int, chosen: int):
        if t == len(pairs):
            yield chosen
            return
        i, j = pairs[t]
        ok = True
        if i > 0 and not (chosen >> index[(i - 1, j)]) & 1:
            ok = False
        if j - 1 > i and not (chosen >> index[(i, j - 1)]) & 1:
            ok = False
        if ok:
            yield from rec(t + 1, chosen | (1 << t))
        yield from rec(t + 1, chosen)

    for chosen in rec(0, 0):
        yield Graph.from_edges(n, ((pairs[t][0] + 1, pairs[t][1] + 1)
                                   for t in range(len(pairs)) if (chosen >> t) & 1))
