"""Instance generators: the clique-blowup hardness gadget, random graphs,
multipartite samples, and planted yes-instances with a known edit bound.

Randomness uses the PCG64 generator with an explicit seed, so instances
are reproducible across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, connected_components
from .oracles import (
    InstanceTooLargeError,
    cluster_editing_opt,
    kl_cluster_editing_opt,
)


@dataclass(frozen=True)
class GadgetMap:
    """Bijection between (source vertex, copy index) and gadget vertices.

    Source vertex i expands to the clique {forward(i, p) for p in 1..ell};
    the gadget has exactly ell * n_source vertices.
    """

    n_source: int
    ell: int

    def forward(self, v: int, p: int) -> int:
        if not 0 <= v < self.n_source:
            raise ValueError(f"source vertex {v} out of range")
        if not 1 <= p <= self.ell:
            raise ValueError(f"copy index {p} out of range 1..{self.ell}")
        return v * self.ell + (p - 1)

    def backward(self, x: int) -> tuple[int, int]:
        v, r = divmod(x, self.ell)
        return v, r + 1


def build_kl_gadget(g: Graph, ell: int) -> tuple[Graph, GadgetMap]:
    """Blow each vertex up into an ell-clique and each edge into all
    cross pairs with distinct copy indices.

    The result is ell-partite (copies with equal index form independent
    sets). The source graph must have no isolated-vertex component.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    for comp in connected_components(g):
        if len(comp) == 1:
            raise ValueError(f"trivial component {set(comp)} not allowed")
    gm = GadgetMap(g.n, ell)
    edges = []
    for i in range(g.n):
        for p in range(1, ell + 1):
            for q in range(p + 1, ell + 1):
                edges.append((gm.forward(i, p), gm.forward(i, q)))
    for i, j in g.edges():
        for p in range(1, ell + 1):
            for q in range(1, ell + 1):
                if p != q:
                    a, b = gm.forward(i, p), gm.forward(j, q)
                    if a < b:
                        edges.append((a, b))
                    else:
                        edges.append((b, a))
    # Cross pairs (i,p)-(j,q) and (j,q)-(i,p) are produced once each way.
    dedup = sorted(set(edges))
    return Graph.from_edges(g.n * ell, dedup), gm


class GadgetCheck(NamedTuple):
    opt_cluster: int
    opt_gadget: int
    ratio_ok: bool


def check_gadget_optimum(g: Graph, ell: int) -> GadgetCheck:
    """Brute-force both optima and test opt_gadget == ell*(ell-1)*opt_cluster.

    opt_cluster is the plain cluster-editing optimum of g; opt_gadget is
    the editing optimum of the blowup against the family of disjoint
    at-most-ell-partite cliques.
    """
    gadget, _ = build_kl_gadget(g, ell)
    from .oracles import MAX_DP_VERTICES

    if gadget.n > MAX_DP_VERTICES:
        raise InstanceTooLargeError(
            f"gadget has {gadget.n} vertices, exact check limited to {MAX_DP_VERTICES}"
        )
    opt_cluster = cluster_editing_opt(g)
    opt_gadget = kl_cluster_editing_opt(gadget, ell)
    return GadgetCheck(opt_cluster, opt_gadget, opt_gadget == ell * (ell - 1) * opt_cluster)


def _pair_from_index(n: int, idx: int) -> tuple[int, int]:
    # Lexicographic rank over pairs (u, v), u < v.
    u = int((2 * n - 1 - math.isqrt((2 * n - 1) ** 2 - 8 * idx)) // 2)
    cum = u * (2 * n - u - 1) // 2
    while cum > idx:
        u -= 1
        cum = u * (2 * n - u - 1) // 2
    while u + 1 < n and (u + 1) * (2 * n - u - 2) // 2 <= idx:
        u += 1
        cum = u * (2 * n - u - 1) // 2
    return u, u + 1 + (idx - cum)


def gen_random(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed (PCG64)."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    total = n * (n - 1) // 2
    if edge_probability == 0.0 or total == 0:
        return Graph.from_edges(n, [])
    if edge_probability == 1.0:
        return Graph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n)]
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    log_q = math.log1p(-edge_probability)
    edges = []
    idx = -1
    while True:
        gap = int(math.log(rng.random()) / log_q)
        idx += 1 + gap
        if idx >= total:
            break
        edges.append(_pair_from_index(n, idx))
    return Graph.from_edges(n, edges)


def gen_l_partite(n: int, ell: int, edge_probability: float, seed: int) -> Graph:
    """Random graph whose vertices are colored with at most ell colors and
    whose edges only join distinct colors (so the result is ell-partite)."""
    rng = np.random.Generator(np.random.PCG64(seed))
    colors = rng.integers(0, ell, size=n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if colors[u] != colors[v] and rng.random() < edge_probability:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def gen_planted(
    num_clusters: int,
    sizes: list[int],
    ell: int,
    noise_edits: int,
    seed: int,
) -> tuple[Graph, int]:
    """Planted yes-instance: disjoint cliques / at-most-ell-partite cliques,
    perturbed by exactly ``noise_edits`` distinct random pair toggles.

    Returns the graph plus the bound ``noise_edits``: undoing the noise is a
    valid solution, so the optimum is at most that.
    """
    if num_clusters != len(sizes):
        raise ValueError("num_clusters must equal len(sizes)")
    if any(s < 1 for s in sizes):
        raise ValueError("cluster sizes must be positive")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    n = sum(sizes)
    total = n * (n - 1) // 2
    if noise_edits < 0 or noise_edits > total:
        raise ValueError("noise_edits out of range")

    rng = np.random.Generator(np.random.PCG64(seed))
    edges: list[tuple[int, int]] = []
    offset = 0
    for size in sizes:
        verts = list(range(offset, offset + size))
        make_clique = size < 2 or ell < 2 or rng.integers(0, 2) == 0
        if make_clique:
            for i, u in enumerate(verts):
                for v in verts[i + 1 :]:
                    edges.append((u, v))
        else:
            r = int(rng.integers(2, min(ell, size) + 1))
            color = [i % r for i in range(size)]
            extra = rng.integers(0, r, size=size - r)
            for i in range(r, size):
                color[i] = int(extra[i - r])
            for i, u in enumerate(verts):
                for j in range(i + 1, size):
                    if color[i] != color[j]:
                        edges.append((u, verts[j]))
        offset += size

    g = Graph.from_edges(n, edges)
    if noise_edits == 0:
        return g, 0

    if total <= 1_000_000:
        chosen = rng.choice(total, size=noise_edits, replace=False)
    else:
        seen: set[int] = set()
        while len(seen) < noise_edits:
            seen.add(int(rng.integers(0, total)))
        chosen = sorted(seen)
    adj = [set(s) for s in g.adj]
    for idx in sorted(int(i) for i in chosen):
        u, v = _pair_from_index(n, idx)
        if v in adj[u]:
            adj[u].discard(v)
            adj[v].discard(u)
        else:
            adj[u].add(v)
            adj[v].add(u)
    return Graph._from_adj(adj), noise_edits
