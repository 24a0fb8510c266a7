import itertools

import numpy as np
import pytest

from linforest.constructions import build_H
from linforest.forest import OracleCapError, forest_edges, is_lnk_free
from linforest.graph import BipartiteGraph, Graph, complete_graph, disjoint_union, empty_graph, parse_graph6
from linforest.oracle import (ConfigError, check_shifted_subgraph_of_H, extremal_count,
                              extremal_count_bipartite, free_shifted_graphs, maximal_free_bipartite,
                              maximal_free_graphs, theorem_tuples, verify_theorem, witness_ok)
from linforest.patterns import PatternSpec, count_bicliques
from linforest.shifting import is_shifted


def _lf_all_graphs(n, slots):
    """lf of every edge mask over ``slots``: a linear forest is exactly a set of
    consecutive pairs of some vertex ordering, so take the max over orderings."""
    index = {p: t for t, p in enumerate(slots)}
    masks = np.arange(1 << len(slots), dtype=np.int64)
    best = np.zeros(len(masks), np.int64)
    for perm in itertools.permutations(range(n)):
        hits = np.zeros(len(masks), np.int64)
        for a, b in zip(perm, perm[1:]):
            t = index.get((min(a, b), max(a, b)))
            if t is not None:
                hits += (masks >> t) & 1
        np.maximum(best, hits, out=best)
    return best


def _graph(n, slots, mask):
    return Graph.from_edges(n, [(u + 1, v + 1) for t, (u, v) in enumerate(slots) if (mask >> t) & 1])


PATTERNS = [PatternSpec("clique", 2), PatternSpec("clique", 3), PatternSpec("clique-star", 1, 2),
            PatternSpec("clique-star", 2, 2)]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_full_mode_against_unpruned_enumeration(n):
    slots = list(itertools.combinations(range(n), 2))
    lf = _lf_all_graphs(n, slots)
    full = (1 << len(slots)) - 1
    for k in range(1, n):
        free = [m for m in range(full + 1) if lf[m] <= k - 1]
        maximal = {_graph(n, slots, m) for m in free
                   if all(lf[m | (1 << t)] > k - 1 for t in range(len(slots)) if not (m >> t) & 1)}
        free = [_graph(n, slots, m) for m in free]
        assert set(maximal_free_graphs(n, k)) == maximal
        for pattern in PATTERNS:
            rec = extremal_count(n, k, pattern)
            assert rec.oracle == max(pattern.count(g) for g in free)
            assert witness_ok(rec, k)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bipartite_against_unpruned_enumeration(n):
    slots = [(x, n + y) for x in range(n) for y in range(n)]
    lf = _lf_all_graphs(2 * n, slots)
    hosts = [BipartiteGraph(n, n, tuple((m >> (x * n)) & ((1 << n) - 1) for x in range(n)))
             for m in range(1 << len(slots))]
    for k in range(1, 2 * n):
        free = [h for h, v in zip(hosts, lf) if v <= k - 1]
        for s, t in [(1, 1), (1, 2), (2, 2)]:
            rec = extremal_count_bipartite(n, k, s, t)
            assert rec.oracle == max(count_bicliques(h, s, t) for h in free)
            assert witness_ok(rec, k)
        assert all(forest_edges(h.to_graph()) <= k - 1 for h in maximal_free_bipartite(n, k))


def test_worked_examples():
    rec = extremal_count(5, 3, PatternSpec("clique", 2))
    assert rec.oracle == rec.formula == 4
    star = parse_graph6(rec.witness)
    assert sorted(star.degree(v) for v in range(1, 6)) == [1, 1, 1, 1, 4]
    rec = extremal_count(6, 3, PatternSpec("clique", 3))
    assert rec.oracle == rec.formula == 1
    w = parse_graph6(rec.witness)
    assert w.num_edges() == 3 and is_lnk_free(w, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_mode_agreement(n):
    for k in range(1, n):
        for s in (2, 3):
            p = PatternSpec("clique", s)
            assert extremal_count(n, k, p, "full").oracle == extremal_count(n, k, p, "shifted-only").oracle


def test_shifted_space_is_free_and_shifted():
    for g in free_shifted_graphs(7, 4):
        assert is_shifted(g) and forest_edges(g) <= 3


def test_parallel_split_is_deterministic():
    assert maximal_free_graphs(6, 4, threads=1) == maximal_free_graphs(6, 4, threads=3)
    assert maximal_free_graphs(6, 4, threads=1, branch_depth=0) == maximal_free_graphs(6, 4, threads=1)


def test_caps_and_config():
    with pytest.raises(OracleCapError):
        extremal_count(8, 3, PatternSpec("clique", 2))
    with pytest.raises(OracleCapError):
        extremal_count(11, 3, PatternSpec("clique", 2), "shifted-only")
    with pytest.raises(OracleCapError):
        extremal_count_bipartite(6, 3, 1, 1)
    with pytest.raises(ConfigError):
        extremal_count(5, 2, PatternSpec("biclique", 1, 1))
    with pytest.raises(ConfigError):
        extremal_count(5, 5, PatternSpec("clique", 2))
    with pytest.raises(ConfigError):
        extremal_count(5, 2, PatternSpec("clique", 2), "sampled")


def test_sweep_records_errors_per_row():
    rows = verify_theorem("bipartite", [(2, 3, 1, 1)], mode="shifted-only")
    assert rows[0].error.startswith("ConfigError") and not rows[0].match
    rows = verify_theorem("edges", [(8, 2, 2, 0)])
    assert rows[0].error.startswith("OracleCapError")


def test_theorem_tuples():
    assert len(theorem_tuples("edges", 6)) == 15
    assert theorem_tuples("bipartite", 2, 2, None, [(1, 1)]) == [(2, 2, 1, 1), (2, 3, 1, 1)]
    assert theorem_tuples("cliques", 4, 4, (2, 3), [(3, 0)]) == [(4, 2, 3, 0), (4, 3, 3, 0)]


def test_container_check():
    assert check_shifted_subgraph_of_H(build_H(8, 5, 3), 5) == 3
    assert check_shifted_subgraph_of_H(disjoint_union(complete_graph(4), empty_graph(3)), 4) == 4
    with pytest.raises(ValueError):
        check_shifted_subgraph_of_H(Graph.from_edges(3, [(2, 3)]), 2)
