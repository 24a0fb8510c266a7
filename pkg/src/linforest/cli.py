"""Command-line interface.

Exit codes: 0 pass, 1 mismatch found, 2 usage/config error, 3 oracle cap exceeded.
Graphs travel as graph6 lines; bipartite graphs are the graph6 of the
(nx+ny)-vertex graph preceded by a ``parts=nx,ny`` line.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterator, Optional, TextIO

from . import formulas
from .constructions import (build_extremal_bipartite, build_extremal_unrestricted, build_Gstar,
                            build_H, ceil_half)
from .forest import OracleCapError, max_linear_forest
from .graph import BipartiteGraph, Graph, Graph6Error, encode_graph6, parse_graph6
from .oracle import (BIPARTITE_CAP, FULL_CAP, SHIFTED_CAP, THEOREMS, ConfigError,
                     extremal_count, extremal_count_bipartite, theorem_tuples, verify_theorem)
from .patterns import PatternSpec, count_bicliques, count_clique_stars, count_cliques
from .shifting import shift, shift_closure

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Input:
    """graph6 lines from files or stdin; tracks the latest ``parts=`` line."""

    def __init__(self, paths: list[str]):
        self.paths = paths
        self.parts: Optional[tuple[int, int]] = None
        self.errors = 0

    def _streams(self) -> Iterator[tuple[str, TextIO]]:
        if not self.paths:
            yield "<stdin>", sys.stdin
        for p in self.paths:
            with open(p) as fh:
                yield p, fh

    def graphs(self) -> Iterator[Graph]:
        for name, fh in self._streams():
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if line.startswith("parts="):
                    nx, ny = line[len("parts="):].split(",")
                    self.parts = (int(nx), int(ny))
                    continue
                try:
                    yield parse_graph6(line)
                except Graph6Error as exc:
                    self.errors += 1
                    print(f"{name}:{lineno}: {exc}", file=sys.stderr)


def _edge_list(edges) -> str:
    return ",".join(f"{u}-{v}" for u, v in edges)


def _parse_edges(text: str) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for item in text.split(","):
        u, v = item.split("-")
        out.append((int(u), int(v)))
    return out


def _to_bipartite(g: Graph, parts: Optional[tuple[int, int]]) -> BipartiteGraph:
    if parts is None:
        if g.n % 2:
            raise ConfigError("bipartite input needs a parts=nx,ny line or --parts")
        parts = (g.n // 2, g.n // 2)
    nx, ny = parts
    if nx + ny != g.n:
        raise ConfigError(f"parts {nx},{ny} do not add up to n={g.n}")
    low = (1 << nx) - 1
    if any(g.rows[x] & low for x in range(nx)) or any(g.rows[nx + y] >> nx for y in range(ny)):
        raise ConfigError("graph has an edge inside a part")
    return BipartiteGraph(nx, ny, tuple(g.rows[x] >> nx for x in range(nx)))


# -- subcommands ---------------------------------------------------------------

def cmd_lf(args) -> int:
    src = _Input(args.files)
    for g in src.graphs():
        stats = max_linear_forest(g)
        print(f"lf={stats.lf} witness={_edge_list(stats.witness)}")
    return EXIT_USAGE if src.errors else EXIT_OK


def cmd_shift(args) -> int:
    if args.n is not None:
        graphs = iter([Graph.from_edges(args.n, _parse_edges(args.edges or ""))])
        src = None
    else:
        src = _Input(args.files)
        graphs = src.graphs()
    for g in graphs:
        if args.fixpoint:
            out = shift_closure(g)
        else:
            if args.i is None or args.j is None:
                raise ConfigError("shift needs --i and --j, or --fixpoint")
            out, _ = shift(g, args.i, args.j)
        print(encode_graph6(out) if args.format == "g6" else _edge_list(out.edges()))
    return EXIT_USAGE if src is not None and src.errors else EXIT_OK


def cmd_count(args) -> int:
    src = _Input(args.files)
    parts = tuple(int(x) for x in args.parts.split(",")) if args.parts else None
    for g in src.graphs():
        if args.kind == "clique":
            print(count_cliques(g, args.s))
        elif args.kind == "clique-star":
            print(count_clique_stars(g, args.s, _need_t(args)))
        else:
            print(count_bicliques(_to_bipartite(g, parts or src.parts), args.s, _need_t(args)))
    return EXIT_USAGE if src.errors else EXIT_OK


def _need_t(args) -> int:
    if args.t is None:
        raise ConfigError(f"{args.kind} needs t")
    return args.t


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigError(f"family {args.family} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "H":
        _need(args, "n", "k", "m")
        g = build_H(args.n, args.k, args.m)
    elif fam in ("clique", "dominating"):
        _need(args, "n", "k")
        g = build_extremal_unrestricted(args.n, args.k, fam)
    elif fam in ("bip-odd", "bip-even"):
        _need(args, "n", "k")
        if (args.k % 2 == 1) != (fam == "bip-odd"):
            raise ConfigError(f"{fam} needs {'odd' if fam == 'bip-odd' else 'even'} k")
        g = build_extremal_bipartite(args.n, args.k)
    else:
        _need(args, "n", "kceil", "x")
        g = build_Gstar(args.n, args.kceil, args.x)

    if isinstance(g, BipartiteGraph):
        print(f"parts={g.nx},{g.ny}")
        print(encode_graph6(g.to_graph()))
    else:
        print(encode_graph6(g))
    if not args.check:
        return EXIT_OK
    return _check_construction(args, g)


def _check_construction(args, g) -> int:
    """Print lf, pattern counts and closed-form agreement; exit 1 on disagreement."""
    agree = True
    host = g.to_graph() if isinstance(g, BipartiteGraph) else g
    lf = max_linear_forest(host).lf
    print(f"lf={lf} edges={host.num_edges()}")
    if args.k is not None:
        free = lf <= args.k - 1
        print(f"free_at_k={int(free)}")
        agree &= free
    fam = args.family
    if isinstance(g, BipartiteGraph):
        k = args.k if args.k is not None else None
        for s, t in ((1, 1), (1, 2), (2, 2), (2, 3)):
            c = count_bicliques(g, s, t)
            line = f"K{s},{t}={c}"
            if fam == "gstar":
                want = formulas.f_bip_closed(args.n, args.kceil, args.x, s, t)
                if s != t:
                    want += formulas.f_bip_closed(args.n, args.kceil, args.x, t, s)
                line += f" closed={want}"
                agree &= want == c
            elif k is not None:
                want = formulas.ex_bip_biclique_linforest(args.n, k, s, t).value
                line += f" formula={want}"
                agree &= want == c
            print(line)
        return EXIT_OK if agree else EXIT_MISMATCH
    for s in (2, 3, 4):
        c = count_cliques(g, s)
        line = f"K{s}={c}"
        if fam == "H":
            want = formulas.count_H_cliques_closed(args.n, args.k, args.m, s)
            line += f" closed={want}"
            agree &= want == c
        else:
            ev = formulas.ex_cliques_linforest(args.n, args.k, s)
            line += f" formula={ev.value} branch={ev.branch}"
        print(line)
    for s, t in ((1, 2), (2, 2), (1, 3)):
        c = count_clique_stars(g, s, t)
        line = f"K*{s},{t}={c}"
        if fam == "H":
            want = formulas.count_H_cliquestars_closed(args.n, args.k, args.m, s, t)
            line += f" closed={want}"
            agree &= want == c
        else:
            ev = formulas.ex_cliquestar_linforest(args.n, args.k, s, t)
            line += f" formula={ev.value} branch={ev.branch}"
        print(line)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_formula(args) -> int:
    fn = formulas.FORMULAS[args.name]
    try:
        res = fn(*args.params)
    except TypeError as exc:
        raise ConfigError(f"{args.name}: {exc}") from exc
    if isinstance(res, formulas.Evaluation):
        print(f"{res.value} branch={res.branch}")
    else:
        print(res)
    return EXIT_OK


def _pairs(theorem: str, s_list, t_list) -> list[tuple[int, int]]:
    if theorem == "edges":
        return [(2, 0)]
    if theorem == "cliques":
        return [(s, 0) for s in (s_list or [2, 3, 4])]
    if theorem == "cliquestars":
        return [(s, t) for s in (s_list or [1, 2]) for t in (t_list or [2, 3])]
    return [(s, t) for s in (s_list or [1, 2]) for t in (t_list or [1, 2])]


def cmd_verify(args) -> int:
    theorem = args.theorem
    k_range = None
    if args.k_range:
        lo, hi = (int(x) for x in args.k_range.split(":"))
        top = 2 * args.n_max - 1 if theorem == "bipartite" else args.n_max - 1
        if lo < 1 or hi < lo or hi > top:
            raise ConfigError(f"k-range {lo}:{hi} outside 1..{top}")
        k_range = (lo, hi)
    if args.n_min < 2 or args.n_max < args.n_min:
        raise ConfigError("need 2 <= n-min <= n-max")
    tuples = theorem_tuples(theorem, args.n_max, args.n_min, k_range,
                            _pairs(theorem, args.s, args.t))
    rows = verify_theorem(theorem, tuples, args.mode, threads=args.threads)

    from .report import VerificationReport

    report = VerificationReport(theorem, args.mode, {
        "n": f"{args.n_min}..{args.n_max}",
        "k": args.k_range or "all",
        "pairs": " ".join(f"{s},{t}" for s, t in _pairs(theorem, args.s, args.t)),
    }, rows)
    if args.out:
        report.write_csv(args.out)
        if not args.no_figure:
            from .plotting import render_report_figure

            render_report_figure(report, Path(args.out).with_suffix(".png"))
    else:
        report.write_csv(sys.stdout)
    bad = [r for r in rows if not r.match]
    for r in bad:
        print(f"MISMATCH {r.theorem} n={r.n} k={r.k} {r.pattern}: formula={r.formula} "
              f"oracle={r.oracle} witness={r.witness} {r.error}", file=sys.stderr)
    print(f"{report.status}: {len(rows) - len(bad)}/{len(rows)} rows match", file=sys.stderr)
    if any("OracleCapError" in r.error for r in rows):
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_extremal(args) -> int:
    if args.bipartite:
        rec = extremal_count_bipartite(args.n, args.k, args.s, args.t or args.s,
                                       threads=args.threads)
    else:
        pattern = PatternSpec(args.kind, args.s, args.t or 0)
        rec = extremal_count(args.n, args.k, pattern, args.mode, threads=args.threads)
    print(f"oracle={rec.oracle} formula={'' if rec.formula is None else rec.formula} "
          f"match={int(rec.match)} witness={rec.witness}"
          + (f" parts={rec.parts[0]},{rec.parts[1]}" if rec.parts else ""))
    return EXIT_OK if rec.formula is None or rec.match else EXIT_MISMATCH


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linforest", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lf", help="largest linear forest of each graph6 line")
    sp.add_argument("files", nargs="*")
    sp.set_defaults(func=cmd_lf)

    sp = sub.add_parser("shift", help="apply S_ij or shift to a fixpoint")
    sp.add_argument("files", nargs="*")
    sp.add_argument("--i", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--fixpoint", action="store_true")
    sp.add_argument("--n", type=int, help="build the input from --edges instead of graph6")
    sp.add_argument("--edges", help="edge list like 1-2,2-3")
    sp.add_argument("--format", choices=("g6", "edges"), default="g6")
    sp.set_defaults(func=cmd_shift)

    sp = sub.add_parser("count", help="pattern counts of each graph6 line")
    sp.add_argument("kind", choices=("clique", "clique-star", "biclique"))
    sp.add_argument("s", type=int)
    sp.add_argument("t", type=int, nargs="?")
    sp.add_argument("files", nargs="*")
    sp.add_argument("--parts", help="nx,ny for biclique input")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("construct", help="emit an extremal construction")
    sp.add_argument("--family", required=True,
                    choices=("H", "clique", "dominating", "bip-odd", "bip-even", "gstar"))
    for name in ("n", "k", "m", "kceil", "x"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("formula", help="evaluate a closed form")
    sp.add_argument("name", choices=sorted(formulas.FORMULAS))
    sp.add_argument("params", type=int, nargs="+")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="sweep a theorem against the exhaustive oracle")
    sp.add_argument("theorem", choices=THEOREMS)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--k-range", help="lo:hi")
    sp.add_argument("--s", type=int, nargs="+")
    sp.add_argument("--t", type=int, nargs="+")
    sp.add_argument("--mode", choices=("full", "shifted-only"), default="full")
    sp.add_argument("--out", help="CSV path; a .png figure is written alongside")
    sp.add_argument("--no-figure", action="store_true")
    sp.add_argument("--threads", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("extremal", help="one oracle evaluation")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("kind", choices=("clique", "clique-star", "biclique"))
    sp.add_argument("s", type=int)
    sp.add_argument("t", type=int, nargs="?")
    sp.add_argument("--mode", choices=("full", "shifted-only"), default="full")
    sp.add_argument("--threads", type=int)
    sp.set_defaults(func=cmd_extremal, bipartite=False)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "extremal" and args.kind == "biclique":
        args.bipartite = True
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ConfigError, formulas.FormulaRangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
