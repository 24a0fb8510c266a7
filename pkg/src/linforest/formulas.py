"""Exact closed forms for generalized Turán numbers of matchings and spanning
linear forests, and the proof-level intermediates.

All arithmetic is on Python ints. ``binom`` is total: C(a, b) = 0 whenever
b < 0, a < 0 or b > a, which is what makes every displayed expression
well defined at the parameter boundaries. Each evaluator enforces its
theorem's hypotheses and raises ``FormulaRangeError`` outside them.
"""
from __future__ import annotations

from math import comb
from typing import NamedTuple


class FormulaRangeError(ValueError):
    pass


class Evaluation(NamedTuple):
    value: int
    branch: str


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise FormulaRangeError(what)


def _pick(**branches: int) -> Evaluation:
    # first listed branch wins ties
    name = max(branches, key=lambda b: branches[b])
    return Evaluation(branches[name], name)


def _fl(k: int) -> int:
    return (k - 1) // 2


def _cl(k: int) -> int:
    return -(-(k + 1) // 2)


# -- matchings ---------------------------------------------------------------

def ex_edges_matching(n: int, k: int) -> Evaluation:
    _require(k >= 1 and n >= 2 * k + 1, f"needs k >= 1 and n >= 2k+1 (n={n}, k={k})")
    return _pick(clique=binom(2 * k + 1, 2), dominating=binom(k, 2) + k * (n - k))


def ex_cliques_matching(n: int, k: int, s: int) -> Evaluation:
    _require(s >= 2 and k >= 1 and n >= 2 * k + 1, f"needs s >= 2, n >= 2k+1 (n={n}, k={k}, s={s})")
    return _pick(clique=binom(2 * k + 1, s),
                 dominating=binom(k, s) + (n - k) * binom(k, s - 1))


def ex_cliquestar_matching(n: int, k: int, s: int, t: int) -> Evaluation:
    _require(s >= 1 and t >= 2 and k >= 1 and n >= 2 * k + 1,
             f"needs s >= 1, t >= 2, n >= 2k+1 (n={n}, k={k}, s={s}, t={t})")
    return _pick(
        clique=binom(2 * k + 1, s + t) * binom(s + t, t),
        dominating=binom(k, s) * binom(n - s, t) + (n - k) * binom(k, s + t - 1) * binom(s + t - 1, t),
    )


def ex_bip_biclique_matching(n: int, k: int, s: int, t: int) -> Evaluation:
    _require(s >= 2 and t >= 2 and k >= 1 and n >= k, f"needs s, t >= 2, n >= k (n={n}, k={k})")
    if s == t:
        return Evaluation(binom(k, s) * binom(n, s), "s=t")
    return Evaluation(binom(k, s) * binom(n, t) + binom(k, t) * binom(n, s), "s!=t")


# -- spanning linear forests ---------------------------------------------------

def ex_edges_linforest(n: int, k: int) -> Evaluation:
    _require(1 <= k <= n - 1, f"needs 1 <= k <= n-1 (n={n}, k={k})")
    c = 0 if k % 2 else 1
    return _pick(clique=binom(k, 2), dominating=binom(n, 2) - binom(n - _fl(k), 2) + c)


def ex_cliques_linforest(n: int, k: int, s: int) -> Evaluation:
    _require(s >= 2 and k >= 1 and n >= k + 1, f"needs s >= 2, 1 <= k, n >= k+1 (n={n}, k={k}, s={s})")
    return _pick(clique=binom(k, s),
                 dominating=binom(_cl(k), s) + (n - _cl(k)) * binom(_fl(k), s - 1))


def ex_cliquestar_linforest(n: int, k: int, s: int, t: int) -> Evaluation:
    _require(s >= 1 and t >= 2 and k >= 1 and n >= k + 1,
             f"needs s >= 1, t >= 2, n >= k+1 (n={n}, k={k}, s={s}, t={t})")
    lo, hi = _fl(k), _cl(k)
    return _pick(
        clique=binom(k, s + t) * binom(s + t, t),
        dominating=(binom(lo, s) * binom(n - s, t)
                    + (n - hi) * binom(lo, s - 1) * binom(lo - s + 1, t)
                    + (binom(hi, s) - binom(lo, s)) * binom(hi - s, t)),
    )


def ex_bip_biclique_linforest(n: int, k: int, s: int, t: int) -> Evaluation:
    _require(s >= 1 and t >= 1 and k >= 2, f"needs s, t >= 1 and k >= 2 (k={k}, s={s}, t={t})")
    _require(n >= -(-(k - 1) // 2) and 2 * n >= k + 1,
             f"needs n >= ceil((k-1)/2) and 2n >= k+1 (n={n}, k={k})")
    if k % 2:
        h = (k - 1) // 2
        if s == t:
            return Evaluation(binom(h, s) * binom(n, s), "odd k, s=t")
        return Evaluation(binom(h, s) * binom(n, t) + binom(h, t) * binom(n, s), "odd k, s!=t")
    h = k // 2 - 1
    if s == t == 1:
        return Evaluation(k * n // 2 - k // 2 + 1, "even k, s=t=1")
    if s == t:
        return Evaluation(binom(h, s) * binom(n, s), "even k, s=t>=2")
    if s == 1:
        return Evaluation(k // 2 * binom(n, t) + (n - 1) * binom(h, t), "even k, s=1")
    if t == 1:
        return Evaluation(k // 2 * binom(n, s) + (n - 1) * binom(h, s), "even k, t=1")
    return Evaluation(binom(h, t) * binom(n, s) + binom(h, s) * binom(n, t), "even k, s,t>=2")


# -- proof-level intermediates -------------------------------------------------

def _require_H(n: int, k: int, m: int) -> None:
    _require(_cl(k) <= m <= k <= n, f"needs ceil((k+1)/2) <= m <= k <= n (n={n}, k={k}, m={m})")


def count_H_cliques_closed(n: int, k: int, m: int, s: int) -> int:
    """K_s copies in H(n,k,m): C(m,s) + (n-m) C(k-m, s-1)."""
    _require_H(n, k, m)
    _require(s >= 1, "needs s >= 1")
    return binom(m, s) + (n - m) * binom(k - m, s - 1)


def H_cliquestar_classes(n: int, k: int, m: int, s: int, t: int) -> tuple[int, int, int]:
    """Clique-star copies of H(n,k,m) split by where W1 lives: inside the hub set,
    touching the independent outside, or touching the non-hub clique part."""
    _require_H(n, k, m)
    _require(s >= 1 and t >= 1, "needs s, t >= 1")
    c = k - m
    f1 = binom(c, s) * binom(n - s, t)
    f2 = (n - m) * binom(c, s - 1) * binom(c - s + 1, t)
    f3 = (binom(m, s) - binom(c, s)) * binom(m - s, t)
    return f1, f2, f3


def count_H_cliquestars_closed(n: int, k: int, m: int, s: int, t: int) -> int:
    return sum(H_cliquestar_classes(n, k, m, s, t))


def f_bip_closed(n: int, kceil: int, x: int, s: int, t: int) -> int:
    """One-orientation K_{s,t} count of G*(n, kceil, x)."""
    _require(0 <= x <= kceil <= n, f"needs 0 <= x <= kceil <= n (n={n}, kceil={kceil}, x={x})")
    return (binom(x, s) * binom(n, t) + binom(n, s) * binom(kceil - x, t)
            - binom(x, s) * binom(kceil - x, t))


FORMULAS = {
    "ex-edges-matching": ex_edges_matching,
    "ex-cliques-matching": ex_cliques_matching,
    "ex-cliquestar-matching": ex_cliquestar_matching,
    "ex-bip-biclique-matching": ex_bip_biclique_matching,
    "ex-edges-linforest": ex_edges_linforest,
    "ex-cliques-linforest": ex_cliques_linforest,
    "ex-cliquestar-linforest": ex_cliquestar_linforest,
    "ex-bip-biclique-linforest": ex_bip_biclique_linforest,
    "H-cliques": count_H_cliques_closed,
    "H-cliquestars": count_H_cliquestars_closed,
    "f-bip": f_bip_closed,
}
