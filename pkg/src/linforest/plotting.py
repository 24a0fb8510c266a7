"""Figures written next to verification CSVs."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def render_report_figure(report, path) -> Path:
    """Two panels: oracle against formula (matches on the diagonal), and the
    signed gap oracle - formula per row, split by n."""
    rows = [r for r in report.rows if r.formula is not None and r.oracle is not None]
    path = Path(path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))

    ok = [r for r in rows if r.match]
    bad = [r for r in rows if not r.match]
    ax1.scatter([r.formula for r in ok], [r.oracle for r in ok], s=18, c="tab:blue", label="match")
    if bad:
        ax1.scatter([r.formula for r in bad], [r.oracle for r in bad], s=30, c="tab:red",
                    marker="x", label="mismatch")
    top = max([1] + [max(r.formula, r.oracle) for r in rows])
    ax1.plot([0, top], [0, top], color="0.6", lw=0.8, zorder=0)
    ax1.set_xlabel("closed form")
    ax1.set_ylabel("exhaustive search")
    ax1.legend(frameon=False, fontsize=8)

    ns = sorted({r.n for r in rows})
    for n in ns:
        sub = [r for r in rows if r.n == n]
        ax2.plot([r.k for r in sub], [r.oracle - r.formula for r in sub], "o", ms=4, label=f"n={n}")
    ax2.axhline(0, color="0.6", lw=0.8)
    ax2.set_xlabel("k")
    ax2.set_ylabel("oracle - formula")
    if ns:
        ax2.legend(frameon=False, fontsize=7, ncol=2)

    fig.suptitle(f"{report.theorem} ({report.mode}): {report.status}, {len(rows)} rows")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
