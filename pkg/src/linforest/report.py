"""Verification reports: CSV persistence.

Layout: ``#``-prefixed header lines (tool version, sweep parameters, mode),
then a mandatory CSV header row and one row per parameter tuple.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO, Union

from . import __version__
from .oracle import ExtremalRecord
from .patterns import PatternSpec

COLUMNS = ["theorem", "n", "k", "s", "t", "host", "mode", "formula", "oracle", "match",
           "witness_g6", "millis", "parts", "error"]


@dataclass
class VerificationReport:
    theorem: str
    mode: str
    params: dict[str, str] = field(default_factory=dict)
    rows: list[ExtremalRecord] = field(default_factory=list)
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def write_csv(self, dest: Union[str, Path, TextIO]) -> None:
        if isinstance(dest, (str, Path)):
            with open(dest, "w", newline="") as fh:
                self.write_csv(fh)
            return
        dest.write(f"# linforest {self.version}\n")
        dest.write(f"# theorem={self.theorem} mode={self.mode}\n")
        for key, val in self.params.items():
            dest.write(f"# param {key}={val}\n")
        dest.write(f"# status={self.status}\n")
        writer = csv.writer(dest, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in self.rows:
            writer.writerow(_row(r))

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    @classmethod
    def read_csv(cls, src: Union[str, Path, TextIO]) -> "VerificationReport":
        if isinstance(src, (str, Path)):
            with open(src, newline="") as fh:
                return cls.read_csv(fh)
        lines = src.read().splitlines()
        report = cls(theorem="", mode="")
        body = []
        for line in lines:
            if not line.startswith("#"):
                body.append(line)
                continue
            text = line[1:].strip()
            if text.startswith("linforest "):
                report.version = text.split(" ", 1)[1]
            elif text.startswith("theorem="):
                for part in text.split():
                    key, val = part.split("=", 1)
                    setattr(report, key, val)
            elif text.startswith("param "):
                key, val = text[len("param "):].split("=", 1)
                report.params[key] = val
        reader = csv.DictReader(body)
        if reader.fieldnames != COLUMNS:
            raise ValueError(f"unexpected CSV columns {reader.fieldnames}")
        report.rows = [_record(d) for d in reader]
        return report


def _opt(v) -> str:
    return "" if v is None else str(v)


def _row(r: ExtremalRecord) -> list[str]:
    p = r.pattern
    return [r.theorem, str(r.n), str(r.k), _opt(p.s if p else None), _opt(p.t if p else None),
            r.host, r.mode, _opt(r.formula), _opt(r.oracle), "1" if r.match else "0",
            r.witness, repr(r.millis), f"parts={r.parts[0]},{r.parts[1]}" if r.parts else "",
            r.error]


def _record(d: dict[str, str]) -> ExtremalRecord:
    pattern = None
    if d["s"]:
        s, t = int(d["s"]), int(d["t"] or 0)
        kind = "biclique" if d["host"] == "bipartite" else ("clique" if t == 0 else "clique-star")
        pattern = PatternSpec(kind, s, t)
    parts = None
    if d["parts"]:
        nx, ny = d["parts"][len("parts="):].split(",")
        parts = (int(nx), int(ny))
    rec = ExtremalRecord(
        theorem=d["theorem"], n=int(d["n"]), k=int(d["k"]), pattern=pattern, host=d["host"],
        mode=d["mode"], formula=int(d["formula"]) if d["formula"] else None,
        oracle=int(d["oracle"]) if d["oracle"] else None, witness=d["witness_g6"],
        parts=parts, millis=float(d["millis"]), error=d["error"],
    )
    if rec.match != (d["match"] == "1"):
        raise ValueError(f"match column disagrees with formula/oracle for n={rec.n} k={rec.k}")
    return rec
