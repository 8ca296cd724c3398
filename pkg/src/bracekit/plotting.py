"""Summary figures for verification runs, rendered headless to files."""

from __future__ import annotations

from collections import Counter, defaultdict
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def verdict_chart(records, path):
    """Stacked horizontal bars of verdict counts per check."""
    counts = defaultdict(Counter)
    for r in records:
        counts[r.check][r.verdict] += 1
    checks = sorted(counts)
    verdicts = sorted({v for c in counts.values() for v in c})
    colors = {"PASS": "tab:green", "FAIL": "tab:red", "SAME": "tab:blue", "DIFFERS": "tab:orange"}
    fig, ax = plt.subplots(figsize=(8, 0.22 * len(checks) + 1.5))
    left = [0] * len(checks)
    for v in verdicts:
        widths = [counts[c][v] for c in checks]
        ax.barh(checks, widths, left=left, label=v, color=colors.get(v))
        left = [a + b for a, b in zip(left, widths)]
    ax.set_xlabel("records")
    ax.tick_params(axis="y", labelsize=6)
    ax.invert_yaxis()
    ax.margins(y=0.005)
    ax.legend(loc="lower right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def corpus_chart(counts, path):
    """Number of isomorphism classes per order; ``counts`` maps order -> count."""
    orders = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar([str(n) for n in orders], [counts[n] for n in orders], color="tab:gray")
    ax.set_yscale("log")
    ax.set_xlabel("order")
    ax.set_ylabel("skew braces")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_report(records, corpus_counts, outdir):
    os.makedirs(outdir, exist_ok=True)
    out = [verdict_chart(records, os.path.join(outdir, "verdicts.png"))]
    if corpus_counts:
        out.append(corpus_chart(corpus_counts, os.path.join(outdir, "corpus.png")))
    return out
