"""Acceptance suite. Every check is exact (tolerance 0); each test records one
PASS/FAIL line that conftest prints at the end of the run."""
import random

import pytest

from linforest import formulas
from linforest.constructions import (build_extremal_bipartite, build_extremal_unrestricted,
                                     build_Gstar, build_H, ceil_half)
from linforest.forest import forest_edges, is_lnk_free
from linforest.graph import Graph, complete_graph, disjoint_union, empty_graph, join
from linforest.oracle import (check_shifted_subgraph_of_H, extremal_count_matching,
                              theorem_tuples, verify_theorem, witness_ok)
from linforest.patterns import (PatternSpec, count_bicliques, count_bicliques_oriented,
                                count_clique_stars, count_cliques)
from linforest.shifting import shift, shifted_graphs


def _summary(rows):
    bad = [r for r in rows if not r.match]
    text = f"{len(rows) - len(bad)}/{len(rows)} rows match"
    if bad:
        text += "; first mismatches: " + ", ".join(
            f"(n={r.n},k={r.k},{r.pattern}) oracle={r.oracle} formula={r.formula}" for r in bad[:6])
    return bad, text


def _sweep(theorem, n_max, pairs, mode="full", n_min=2):
    rows = verify_theorem(theorem, theorem_tuples(theorem, n_max, n_min, None, pairs), mode)
    for r in rows:
        assert r.error or witness_ok(r, r.k), f"witness recheck failed for {r}"
    return rows


def test_criterion_1_edges(record_criterion):
    rows = _sweep("edges", 7, [(2, 0)])
    bad, text = _summary(rows)
    record_criterion("criterion 1: edge theorem, full mode, n<=7", not bad, text)
    assert len(rows) == sum(n - 1 for n in range(2, 8))
    assert not bad, text


def test_criterion_2_cliques(record_criterion):
    full = _sweep("cliques", 7, [(2, 0), (3, 0), (4, 0)])
    shifted = _sweep("cliques", 9, [(2, 0), (3, 0), (4, 0)], mode="shifted-only")
    bad, text = _summary(full + shifted)
    record_criterion("criterion 2: clique theorem, full n<=7 and shifted-only n<=9", not bad, text)
    assert not bad, text


def test_criterion_3_cliquestars(record_criterion):
    rows = _sweep("cliquestars", 7, [(1, 2), (2, 2), (1, 3)])
    bad, text = _summary(rows)
    record_criterion("criterion 3: clique-star theorem, full mode, n<=7", not bad, text)
    assert not bad, text


def test_criterion_4_bipartite(record_criterion):
    rows = _sweep("bipartite", 4, [(1, 1), (1, 2), (2, 2), (2, 1)])
    assert {(r.n, r.k) for r in rows} == {(n, k) for n in (2, 3, 4) for k in range(2, 2 * n)}
    bad, text = _summary(rows)
    record_criterion("criterion 4: bipartite theorem, parts n in {2,3,4}", not bad, text)
    assert not bad, text


def _random_graph(rng, n_max=9):
    n = rng.randint(2, n_max)
    p = rng.random()
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                                if rng.random() < p])


def test_criterion_5_shifting_and_stability(record_criterion):
    rng = random.Random(20261018)
    violations = {"a": 0, "b": 0, "c": 0, "d": 0}

    for _ in range(10_000):
        g = _random_graph(rng)
        i, j = sorted(rng.sample(range(1, g.n + 1), 2))
        h, _ = shift(g, i, j)
        if h.num_edges() != g.num_edges() or forest_edges(h) > forest_edges(g):
            violations["a"] += 1
        for s in (2, 3, 4):
            if count_cliques(h, s) < count_cliques(g, s):
                violations["b"] += 1
        for s in (1, 2):
            for t in (2, 3):
                if count_clique_stars(h, s, t) < count_clique_stars(g, s, t):
                    violations["b"] += 1

    samples = 0
    while samples < 10_000:
        g = _random_graph(rng)
        free_pairs = [(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)
                      if not g.has_edge(u, v)]
        if not free_pairs:
            continue
        u, v = rng.choice(free_pairs)
        dsum = g.degree(u) + g.degree(v)
        if dsum < 1:
            continue
        k = rng.randint(1, dsum)
        samples += 1
        if is_lnk_free(g, k) != is_lnk_free(g.add_edge(u, v), k):
            violations["c"] += 1

    checked = 0
    for n in range(2, 8):
        for g in shifted_graphs(n):
            k = forest_edges(g) + 1
            checked += 1
            if check_shifted_subgraph_of_H(g, k) is None:
                violations["d"] += 1

    ok = not any(violations.values())
    record_criterion("criterion 5: shifting, stability and container properties", ok,
                     f"violations {violations}; {checked} shifted graphs checked in (d)")
    assert ok, violations


def test_criterion_6_closed_forms(record_criterion):
    bad = []
    checked = 0
    for n in range(1, 13):
        for k in range(1, n + 1):
            for m in range(ceil_half(k + 1), k + 1):
                g = build_H(n, k, m)
                for s in (1, 2, 3):
                    checked += 1
                    if formulas.count_H_cliques_closed(n, k, m, s) != count_cliques(g, s):
                        bad.append(("H-cliques", n, k, m, s))
                    for t in (1, 2, 3):
                        checked += 1
                        if formulas.count_H_cliquestars_closed(n, k, m, s, t) != count_clique_stars(g, s, t):
                            bad.append(("H-cliquestars", n, k, m, s, t))
    for n in range(1, 7):
        for kceil in range(0, n + 1):
            for x in range(0, kceil + 1):
                bg = build_Gstar(n, kceil, x)
                for s in (1, 2, 3):
                    for t in (1, 2, 3):
                        checked += 1
                        if formulas.f_bip_closed(n, kceil, x, s, t) != count_bicliques_oriented(bg, s, t):
                            bad.append(("f-bip", n, kceil, x, s, t))
    record_criterion("criterion 6: closed forms equal direct counts", not bad,
                     f"{checked} checks, {len(bad)} mismatches {bad[:5]}")
    assert not bad


def _unrestricted_construction(n, k, branch):
    return build_extremal_unrestricted(n, k, branch)


def _matching_construction(n, k, branch):
    if branch == "clique":
        return disjoint_union(complete_graph(2 * k + 1), empty_graph(n - 2 * k - 1))
    return join(complete_graph(k), empty_graph(n - k))


def test_criterion_7_tightness(record_criterion):
    bad = []
    checked = 0
    for n in range(2, 31):
        for k in range(1, min(12, n - 1) + 1):
            ev = formulas.ex_edges_linforest(n, k)
            checked += 1
            if _unrestricted_construction(n, k, ev.branch).num_edges() != ev.value:
                bad.append(("edges", n, k, ev.branch))
            for s in (2, 3, 4):
                ev = formulas.ex_cliques_linforest(n, k, s)
                checked += 1
                if count_cliques(_unrestricted_construction(n, k, ev.branch), s) != ev.value:
                    bad.append(("cliques", n, k, s, ev.branch))
            for s in (1, 2, 3, 4):
                for t in (2, 3):
                    ev = formulas.ex_cliquestar_linforest(n, k, s, t)
                    checked += 1
                    if count_clique_stars(_unrestricted_construction(n, k, ev.branch), s, t) != ev.value:
                        bad.append(("cliquestars", n, k, s, t, ev.branch))
            if n >= 2 * k + 1:
                ev = formulas.ex_edges_matching(n, k)
                checked += 1
                if _matching_construction(n, k, ev.branch).num_edges() != ev.value:
                    bad.append(("edges-matching", n, k))
                for s in (2, 3, 4):
                    ev = formulas.ex_cliques_matching(n, k, s)
                    checked += 1
                    if count_cliques(_matching_construction(n, k, ev.branch), s) != ev.value:
                        bad.append(("cliques-matching", n, k, s))
                    for t in (2, 3):
                        ev = formulas.ex_cliquestar_matching(n, k, s, t)
                        checked += 1
                        if count_clique_stars(_matching_construction(n, k, ev.branch), s, t) != ev.value:
                            bad.append(("cliquestar-matching", n, k, s, t))
    for n in range(1, 31):
        for k in range(2, 13):
            if 2 * n < k + 1 or n < ceil_half(k - 1):
                continue
            bg = build_extremal_bipartite(n, k)
            for s in (1, 2, 3, 4):
                for t in (1, 2, 3):
                    checked += 1
                    if count_bicliques(bg, s, t) != formulas.ex_bip_biclique_linforest(n, k, s, t).value:
                        bad.append(("bipartite", n, k, s, t))
        for k in range(1, min(12, n) + 1):
            for s in (2, 3, 4):
                for t in (2, 3):
                    bg = build_Gstar(n, k, k)
                    checked += 1
                    if count_bicliques(bg, s, t) != formulas.ex_bip_biclique_matching(n, k, s, t).value:
                        bad.append(("bip-matching", n, k, s, t))
    record_criterion("criterion 7: constructions attain the winning branch", not bad,
                     f"{checked} checks, {len(bad)} mismatches {bad[:5]}")
    assert not bad


def _second_differences(values):
    return [values[i + 1] - 2 * values[i] + values[i - 1] for i in range(1, len(values) - 1)]


def test_criterion_8_convexity(record_criterion):
    bad = []
    checked = 0
    binom = formulas.binom
    for n in range(1, 201):
        for k in range(1, min(40, n) + 1):
            lo = ceil_half(k + 1)
            ms = range(lo, k + 1)
            if len(ms) < 3:
                continue
            c_of = [k - m for m in ms]
            for s in range(1, 7):
                f = [binom(m, s) + (n - m) * binom(c, s - 1) for m, c in zip(ms, c_of)]
                checked += 1
                if min(_second_differences(f)) < 0:
                    bad.append(("f", n, k, s))
                for t in range(1, 7):
                    g = [binom(c, s) * binom(n - s, t) + (n - m) * binom(c, s - 1) * binom(c - s + 1, t)
                         + (binom(m, s) - binom(c, s)) * binom(m - s, t) for m, c in zip(ms, c_of)]
                    checked += 1
                    if min(_second_differences(g)) < 0:
                        bad.append(("f1+f2+f3", n, k, s, t))
        for kceil in range(2, min(20, n) + 1):
            for s in range(1, 7):
                for t in range(1, 7):
                    h = [formulas.f_bip_closed(n, kceil, x, s, t) + formulas.f_bip_closed(n, kceil, x, t, s)
                         for x in range(kceil + 1)]
                    checked += 1
                    if min(_second_differences(h)) < 0:
                        bad.append(("f_st+f_ts", n, kceil, s, t))
    record_criterion("criterion 8: discrete convexity", not bad,
                     f"{checked} sequences, {len(bad)} with a negative second difference {bad[:5]}")
    assert not bad


def test_criterion_9_consistency(record_criterion):
    bad = []
    for n in range(2, 201):
        for k in range(1, n):
            if formulas.ex_cliques_linforest(n, k, 2).value != formulas.ex_edges_linforest(n, k).value:
                bad.append(("edges vs cliques", n, k))
    rows = []
    for n in range(3, 8):
        for k in (1, 2):
            if n < 2 * k + 1:
                continue
            for pattern in [PatternSpec("clique", s) for s in (2, 3, 4)] + \
                           [PatternSpec("clique-star", s, t) for s, t in ((1, 2), (2, 2), (1, 3))]:
                rows.append(extremal_count_matching(n, k, pattern))
    for n in range(2, 5):
        for k in (1, 2):
            if n < k:
                continue
            for s, t in ((2, 2), (2, 3), (3, 2)):
                rows.append(extremal_count_matching(n, k, PatternSpec("biclique", s, t)))
    bad_rows, text = _summary(rows)
    bad += bad_rows
    record_criterion("criterion 9: cross-theorem and matching-family consistency", not bad,
                     f"edges vs s=2 cliques checked for n<=200; matching oracle {text}")
    assert not bad
