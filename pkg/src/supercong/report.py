"""Figures and a summary table built from scan records."""

from __future__ import annotations

import csv
import json
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import theorems  # noqa: E402
from .exact import INF, padic_valuation  # noqa: E402


def load_records(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        if path.endswith(".csv"):
            rows = list(csv.DictReader(fh))
            for r in rows:
                r["prime"] = int(r["prime"])
                r["k"] = int(r["k"]) if r["k"] else None
                r["pass"] = r["pass"] == "true"
            return rows
        return [json.loads(line) for line in fh if line.strip()]


def summarize(records) -> list[dict]:
    rows = {}
    for r in records:
        if r["k"] is not None:
            continue  # per-k failure rows are detail, the k=None row carries the verdict
        s = rows.setdefault(r["check_id"], {"check_id": r["check_id"], "runs": 0, "passes": 0,
                                            "failures": 0, "min_prime": r["prime"], "max_prime": r["prime"]})
        s["runs"] += 1
        s["passes" if r["pass"] else "failures"] += 1
        s["min_prime"] = min(s["min_prime"], r["prime"])
        s["max_prime"] = max(s["max_prime"], r["prime"])
    return [rows[k] for k in sorted(rows)]


def pass_heatmap(records, path):
    heads = [r for r in records if r["k"] is None]
    ids = sorted({r["check_id"] for r in heads})
    primes = sorted({r["prime"] for r in heads})
    col = {p: j for j, p in enumerate(primes)}
    row = {c: i for i, c in enumerate(ids)}
    grid = [[float("nan")] * len(primes) for _ in ids]
    for r in heads:
        grid[row[r["check_id"]]][col[r["prime"]]] = 1.0 if r["pass"] else 0.0
    fig, ax = plt.subplots(figsize=(max(6, len(primes) * 0.08), max(2.5, len(ids) * 0.22)))
    ax.imshow(grid, aspect="auto", cmap="RdYlGn", vmin=0, vmax=1, interpolation="nearest")
    ax.set_yticks(range(len(ids)), ids, fontsize=6)
    step = max(1, len(primes) // 12)
    ax.set_xticks(range(0, len(primes), step), [str(p) for p in primes[::step]], fontsize=7)
    ax.set_xlabel("prime")
    ax.set_title("pass (green) / fail (red)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def valuation_margins(ids, primes):
    """v_p(sum - rhs) minus the stated exponent, capped for exact equality."""
    out = {}
    for id in ids:
        spec = theorems.get_spec(id)
        pts = []
        for p in primes:
            v = padic_valuation(theorems.truncated_sum(id, p) - spec.rhs(p), p)
            pts.append((p, None if v == INF else v - spec.r))
        out[id] = pts
    return out


def margin_plot(margins, path):
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for id, pts in margins.items():
        xs = [p for p, m in pts if m is not None]
        ys = [m for p, m in pts if m is not None]
        ax.plot(xs, ys, marker="o", ms=3, lw=0.8, label=id)
    ax.axhline(0, color="grey", lw=0.6)
    ax.set_xlabel("prime")
    ax.set_ylabel("valuation margin")
    ax.legend(fontsize=7, ncol=3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def build(records_path, out_dir, *, margin_hi=199) -> list[str]:
    """Write summary.csv, pass_heatmap.png and, when theorems were scanned, margins.png."""
    records = load_records(records_path)
    os.makedirs(out_dir, exist_ok=True)
    written = []
    summary = os.path.join(out_dir, "summary.csv")
    with open(summary, "w", encoding="utf-8", newline="") as fh:
        cols = ["check_id", "runs", "passes", "failures", "min_prime", "max_prime"]
        w = csv.DictWriter(fh, cols, lineterminator="\n")
        w.writeheader()
        w.writerows(summarize(records))
    written.append(summary)
    if records:
        heat = os.path.join(out_dir, "pass_heatmap.png")
        pass_heatmap(records, heat)
        written.append(heat)
    thm = sorted({r["check_id"] for r in records} & set(theorems.THEOREM_IDS))
    if thm:
        primes = sorted({r["prime"] for r in records if r["check_id"] in thm and r["prime"] <= margin_hi})
        mp = os.path.join(out_dir, "margins.png")
        margin_plot(valuation_margins(thm, primes), mp)
        written.append(mp)
    return written
