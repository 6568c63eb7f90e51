"""Timing harness for the decompose / kernelize / solve phases.

Produces machine-readable CSV rows and, optionally, a log-log timing
figure rendered to a file next to the delimited output.
"""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass
from typing import IO, Sequence

from .decomposition import decompose, q_partition, quotient_graph
from .gadgets import gen_planted
from .graph import Graph
from .kernel import kernelize
from .solver import solve_bounded

CSV_FIELDS = [
    "label",
    "n",
    "m",
    "ell",
    "k",
    "seed",
    "decompose_s",
    "kernelize_s",
    "solve_s",
    "status",
]


@dataclass
class BenchRow:
    label: str
    n: int
    m: int
    ell: int
    k: int
    seed: int
    decompose_s: float
    kernelize_s: float
    solve_s: float | None
    status: str


def planted_instance(n: int, cluster_size: int, ell: int, k: int, seed: int) -> Graph:
    """Disjoint planted clusters of roughly the given size, k noise toggles."""
    cluster_size = max(1, min(cluster_size, n))
    sizes = [cluster_size] * (n // cluster_size)
    rem = n - sum(sizes)
    if rem:
        sizes.append(rem)
    g, _ = gen_planted(len(sizes), sizes, ell, k, seed)
    return g


def time_phases(g: Graph, ell: int, k: int, with_solve: bool = False) -> dict:
    t0 = time.perf_counter()
    tree = decompose(g)
    t1 = time.perf_counter()
    quotient_graph_size = len(q_partition(tree))
    res = kernelize(g, ell, k)
    t2 = time.perf_counter()
    solve_s = None
    status = res.status
    if with_solve:
        sres = solve_bounded(g, ell, k)
        t3 = time.perf_counter()
        solve_s = t3 - t2
        status = f"{res.status}/answer={'yes' if sres.answer else 'no'}"
    return {
        "decompose_s": t1 - t0,
        "kernelize_s": t2 - t1,
        "solve_s": solve_s,
        "status": status,
        "quotient_size": quotient_graph_size,
    }


def run_bench(
    sizes: Sequence[int],
    cluster_size: int,
    ell: int,
    k: int,
    seed: int,
    repeat: int = 1,
    with_solve: bool = False,
) -> list[BenchRow]:
    rows = []
    for n in sizes:
        for r in range(repeat):
            g = planted_instance(n, cluster_size, ell, k, seed + r)
            phases = time_phases(g, ell, k, with_solve=with_solve)
            rows.append(
                BenchRow(
                    label=f"planted-n{n}",
                    n=g.n,
                    m=g.m,
                    ell=ell,
                    k=k,
                    seed=seed + r,
                    decompose_s=phases["decompose_s"],
                    kernelize_s=phases["kernelize_s"],
                    solve_s=phases["solve_s"],
                    status=phases["status"],
                )
            )
    return rows


def rows_to_csv(rows: Sequence[BenchRow], fh: IO[str]) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for row in rows:
        rec = asdict(row)
        rec["decompose_s"] = f"{row.decompose_s:.6f}"
        rec["kernelize_s"] = f"{row.kernelize_s:.6f}"
        rec["solve_s"] = "" if row.solve_s is None else f"{row.solve_s:.6f}"
        writer.writerow(rec)


def render_plot(rows: Sequence[BenchRow], path: str) -> None:
    """Phase wall-clock versus instance size, written as an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r.n for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ns, [r.decompose_s for r in rows], "o-", label="decompose")
    ax.plot(ns, [r.kernelize_s for r in rows], "s-", label="kernelize")
    if any(r.solve_s is not None for r in rows):
        ax.plot(
            [r.n for r in rows if r.solve_s is not None],
            [r.solve_s for r in rows if r.solve_s is not None],
            "^-",
            label="solve",
        )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("vertices")
    ax.set_ylabel("seconds")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
