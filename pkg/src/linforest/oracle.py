"""Brute-force extremal search.

Full mode enumerates labeled graphs by DFS over the edge slots in
lexicographic order, pruning as soon as the partial graph stops being free.
Pattern counts are monotone under edge addition, so only edge-maximal free
graphs are evaluated. Shifted-only mode walks the down-sets of the pair
dominance order instead (2^(n-1) of them). That search space is sound for
cliques and clique-stars because shifting keeps a graph free and never lowers
those counts; it is refused for bipartite hosts.
"""
from __future__ import annotations

import logging
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from . import _kernels, formulas
from .constructions import build_H, ceil_half
from .forest import OracleCapError, forest_edges, max_linear_forest
from .graph import BipartiteGraph, Graph, encode_graph6
from .patterns import PatternSpec
from .shifting import is_shifted

log = logging.getLogger(__name__)

FULL_CAP = 7
SHIFTED_CAP = 10
BIPARTITE_CAP = 5
MODES = ("full", "shifted-only")


class ConfigError(ValueError):
    """Invalid parameter/mode combination."""


@dataclass
class ExtremalRecord:
    theorem: str
    n: int
    k: int
    pattern: Optional[PatternSpec]
    host: str
    mode: str
    formula: Optional[int]
    oracle: Optional[int]
    witness: str = ""
    parts: Optional[tuple[int, int]] = None
    millis: float = 0.0
    error: str = ""

    @property
    def match(self) -> bool:
        return not self.error and self.formula is not None and self.formula == self.oracle


@dataclass
class SearchProgress:
    """Shared across worker threads for reporting only; never read for pruning."""

    best: int = 0
    nodes: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def offer(self, value: int, nodes: int) -> None:
        with self._lock:
            self.nodes += nodes
            if value > self.best:
                self.best = value


def default_threads() -> int:
    env = os.environ.get("LINF_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _slots(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return (np.array([p[0] for p in pairs], np.int64),
            np.array([p[1] for p in pairs], np.int64))


def _bip_slots(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = [(x, n + y) for x in range(n) for y in range(n)]
    return (np.array([p[0] for p in pairs], np.int64),
            np.array([p[1] for p in pairs], np.int64))


def _search(n_vertices: int, k: int, kind: int, us, vs, threads: Optional[int],
            branch_depth: int) -> np.ndarray:
    """Run the pruned DFS split into 2^B prefix subtrees; concatenate results in
    serial DFS order so output is independent of scheduling."""
    b = min(branch_depth, len(us))
    progress = SearchProgress()
    # include-before-exclude at each prefix slot, matching the kernel's order
    prefixes = [sum(((p >> (b - 1 - d)) & 1 ^ 1) << d for d in range(b)) for p in range(1 << b)]

    def task(prefix: int) -> np.ndarray:
        masks, count, nodes = _kernels.search_maximal_free(n_vertices, k, kind, us, vs,
                                                           prefix, b, 1 << 62)
        progress.offer(int(count), int(nodes))
        return masks[:count].copy()

    workers = threads or default_threads()
    if workers == 1:
        parts = [task(p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, prefixes))
    log.debug("search n=%d k=%d: %d nodes, largest subtree yield %d",
              n_vertices, k, progress.nodes, progress.best)
    return np.concatenate(parts) if parts else np.zeros(0, np.int64)


@lru_cache(maxsize=None)
def maximal_free_graphs(n: int, k: int, threads: Optional[int] = None,
                        branch_depth: int = 4) -> tuple[Graph, ...]:
    """Every edge-maximal labeled graph on [n] with no linear forest of k edges."""
    us, vs = _slots(n)
    masks = _search(n, k, _kernels.LINEAR_FOREST, us, vs, threads, branch_depth)
    return tuple(_mask_to_graph(n, us, vs, int(m)) for m in masks)


@lru_cache(maxsize=None)
def maximal_matching_free_graphs(n: int, k: int) -> tuple[Graph, ...]:
    """Every edge-maximal labeled graph on [n] with matching number at most k."""
    us, vs = _slots(n)
    masks = _search(n, k, _kernels.MATCHING, us, vs, 1, 0)
    return tuple(_mask_to_graph(n, us, vs, int(m)) for m in masks)


@lru_cache(maxsize=None)
def maximal_free_bipartite(n: int, k: int, kind: int = _kernels.LINEAR_FOREST,
                           threads: Optional[int] = None) -> tuple[BipartiteGraph, ...]:
    us, vs = _bip_slots(n)
    masks = _search(2 * n, k, kind, us, vs, threads, 4)
    out = []
    for m in masks:
        m = int(m)
        rows = tuple((m >> (x * n)) & ((1 << n) - 1) for x in range(n))
        out.append(BipartiteGraph(n, n, rows))
    return tuple(out)


def _mask_to_graph(n: int, us, vs, mask: int) -> Graph:
    rows = [0] * n
    for e in range(len(us)):
        if (mask >> e) & 1:
            u, v = int(us[e]), int(vs[e])
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def free_shifted_graphs(n: int, k: int) -> list[Graph]:
    """All shifted graphs on [n] with lf <= k-1, generated as down-sets in a
    linear extension of the dominance order with freeness pruning."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: t for t, p in enumerate(pairs)}
    out: list[Graph] = []
    adj = np.zeros(n, np.int64)

    def rec(t: int, chosen: int) -> None:
        if t == len(pairs):
            out.append(_mask_to_graph(n, *_slots(n), chosen))
            return
        i, j = pairs[t]
        lower_ok = ((i == 0 or (chosen >> index[(i - 1, j)]) & 1)
                    and (j - 1 == i or (chosen >> index[(i, j - 1)]) & 1))
        if lower_ok:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            if _kernels.max_forest_edges(adj, n) <= k - 1:
                rec(t + 1, chosen | (1 << t))
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
        rec(t + 1, chosen)

    rec(0, 0)
    return out


# -- formulas attached to each pattern ------------------------------------------

def _theorem_formula(theorem: str, n: int, k: int, s: int, t: int) -> Optional[int]:
    try:
        if theorem == "edges":
            return formulas.ex_edges_linforest(n, k).value
        if theorem == "cliques":
            return formulas.ex_cliques_linforest(n, k, s).value
        if theorem == "cliquestars":
            return formulas.ex_cliquestar_linforest(n, k, s, t).value
        if theorem == "bipartite":
            return formulas.ex_bip_biclique_linforest(n, k, s, t).value
    except formulas.FormulaRangeError:
        return None
    raise ConfigError(f"unknown theorem {theorem!r}")


def _natural_theorem(pattern: PatternSpec) -> str:
    return {"clique": "cliques", "clique-star": "cliquestars", "biclique": "bipartite"}[pattern.kind]


def _best(candidates: Iterable, count: Callable[[object], int]):
    best_val, best_g = -1, None
    for g in candidates:
        c = count(g)
        if c > best_val:
            best_val, best_g = c, g
    return best_val, best_g


def extremal_count(n: int, k: int, pattern: PatternSpec, mode: str = "full",
                   theorem: Optional[str] = None, threads: Optional[int] = None,
                   full_cap: int = FULL_CAP, shifted_cap: int = SHIFTED_CAP) -> ExtremalRecord:
    """Maximum pattern count over L_{n,k}-free graphs on [n]."""
    if pattern.kind == "biclique":
        raise ConfigError("biclique patterns need a bipartite host; use extremal_count_bipartite")
    if mode not in MODES:
        raise ConfigError(f"unknown mode {mode!r}")
    if not 1 <= k <= n - 1:
        raise ConfigError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    cap = full_cap if mode == "full" else shifted_cap
    if n > cap:
        raise OracleCapError(f"instance too large for exact oracle: n={n} > {mode} cap {cap}")
    theorem = theorem or _natural_theorem(pattern)
    start = time.perf_counter()
    if mode == "full":
        space: Iterable[Graph] = maximal_free_graphs(n, k, threads)
    else:
        space = free_shifted_graphs(n, k)
    oracle, witness = _best(space, pattern.count)
    return ExtremalRecord(
        theorem=theorem, n=n, k=k, pattern=pattern, host="graph", mode=mode,
        formula=_theorem_formula(theorem, n, k, pattern.s, pattern.t),
        oracle=oracle, witness=encode_graph6(witness),
        millis=(time.perf_counter() - start) * 1000,
    )


def extremal_count_bipartite(n: int, k: int, s: int, t: int, threads: Optional[int] = None,
                             cap: int = BIPARTITE_CAP) -> ExtremalRecord:
    """Maximum K_{s,t} count over L-free bipartite graphs with both parts of size n."""
    if n > cap:
        raise OracleCapError(f"instance too large for exact oracle: parts n={n} > cap {cap}")
    if k < 1 or n < 1:
        raise ConfigError(f"need n, k >= 1, got n={n}, k={k}")
    pattern = PatternSpec("biclique", s, t)
    start = time.perf_counter()
    oracle, witness = _best(maximal_free_bipartite(n, k, threads=threads), pattern.count)
    return ExtremalRecord(
        theorem="bipartite", n=n, k=k, pattern=pattern, host="bipartite", mode="full",
        formula=_theorem_formula("bipartite", n, k, s, t),
        oracle=oracle, witness=encode_graph6(witness.to_graph()), parts=(n, n),
        millis=(time.perf_counter() - start) * 1000,
    )


# -- matching-constrained cross-check -------------------------------------------

def extremal_count_matching(n: int, k: int, pattern: PatternSpec) -> ExtremalRecord:
    """Maximum pattern count over graphs on [n] (or bipartite n+n hosts for
    bicliques) whose matching number is at most k."""
    start = time.perf_counter()
    s, t = pattern.s, pattern.t
    try:
        if pattern.kind == "biclique":
            space = maximal_free_bipartite(n, k, _kernels.MATCHING)
            value = formulas.ex_bip_biclique_matching(n, k, s, t).value
            theorem, host = "bip-matching", "bipartite"
        else:
            space = maximal_matching_free_graphs(n, k)
            if pattern.kind == "clique":
                value = (formulas.ex_edges_matching(n, k) if s == 2
                         else formulas.ex_cliques_matching(n, k, s)).value
            else:
                value = formulas.ex_cliquestar_matching(n, k, s, t).value
            theorem, host = "matching", "graph"
    except formulas.FormulaRangeError:
        value = None
        theorem = "matching"
        host = "bipartite" if pattern.kind == "biclique" else "graph"
    oracle, witness = _best(space, pattern.count)
    g = witness.to_graph() if isinstance(witness, BipartiteGraph) else witness
    return ExtremalRecord(
        theorem=theorem, n=n, k=k, pattern=pattern, host=host, mode="full",
        formula=value, oracle=oracle, witness=encode_graph6(g),
        parts=(n, n) if host == "bipartite" else None,
        millis=(time.perf_counter() - start) * 1000,
    )


# -- sweeps ----------------------------------------------------------------------

THEOREMS = ("edges", "cliques", "cliquestars", "bipartite")


def theorem_tuples(theorem: str, n_max: int, n_min: int = 2,
                   k_range: Optional[tuple[int, int]] = None,
                   pairs: Iterable[tuple[int, int]] = ((2, 0),)) -> list[tuple[int, int, int, int]]:
    """Parameter tuples (n, k, s, t) covered by a sweep. For unrestricted
    theorems k runs over 1..n-1; for the bipartite one over k >= 2 with 2n >= k+1."""
    if theorem not in THEOREMS:
        raise ConfigError(f"unknown theorem {theorem!r}")
    out = []
    for n in range(n_min, n_max + 1):
        if theorem == "bipartite":
            ks = range(2, 2 * n)
        else:
            ks = range(1, n)
        for k in ks:
            if k_range and not k_range[0] <= k <= k_range[1]:
                continue
            for s, t in pairs:
                out.append((n, k, s, t))
    return out


def verify_theorem(theorem: str, tuples: Iterable[tuple[int, int, int, int]],
                   mode: str = "full", threads: Optional[int] = None) -> list[ExtremalRecord]:
    """One record per tuple; per-tuple cap/config errors are recorded, not raised."""
    rows = []
    for n, k, s, t in tuples:
        try:
            if theorem == "bipartite":
                if mode != "full":
                    raise ConfigError("shifted-only search is not established for bipartite hosts")
                rec = extremal_count_bipartite(n, k, s, t, threads=threads)
            else:
                kind = {"edges": "clique", "cliques": "clique", "cliquestars": "clique-star"}[theorem]
                pattern = PatternSpec(kind, 2 if theorem == "edges" else s, t)
                rec = extremal_count(n, k, pattern, mode, theorem=theorem, threads=threads)
        except (OracleCapError, ConfigError, ValueError) as exc:
            kind = "biclique" if theorem == "bipartite" else ("clique-star" if theorem == "cliquestars" else "clique")
            rec = ExtremalRecord(theorem, n, k, PatternSpec(kind, max(s, 1), t),
                                 "bipartite" if theorem == "bipartite" else "graph",
                                 mode, None, None, error=f"{type(exc).__name__}: {exc}")
        log.info("%s n=%d k=%d %s oracle=%s formula=%s", theorem, n, k,
                 rec.pattern, rec.oracle, rec.formula)
        rows.append(rec)
    return rows


def check_shifted_subgraph_of_H(g: Graph, k: int) -> Optional[int]:
    """Least m in [ceil((k+1)/2), k] with E(g) inside E(H(n,k,m)), or None."""
    if not is_shifted(g):
        raise ValueError("graph is not shifted")
    if forest_edges(g) != k - 1:
        raise ValueError(f"largest linear forest of g does not have k-1 = {k - 1} edges")
    for m in range(ceil_half(k + 1), k + 1):
        if m <= g.n and g.is_subgraph_of(build_H(g.n, k, m)):
            return m
    return None


def witness_ok(rec: ExtremalRecord, k: int) -> bool:
    """Post-hoc recheck: witness is free at budget k and attains the oracle value."""
    from .graph import parse_graph6
    from .patterns import count_bicliques

    g = parse_graph6(rec.witness)
    if max_linear_forest(g).lf > k - 1:
        return False
    if rec.host == "bipartite":
        n = rec.parts[0]
        rows = tuple((g.rows[x] >> n) for x in range(n))
        bg = BipartiteGraph(n, n, rows)
        return count_bicliques(bg, rec.pattern.s, rec.pattern.t) == rec.oracle
    return rec.pattern.count(g) == rec.oracle
