"""Exact desk-scale oracles for editing optima.

Subset dynamic programs over all 2^n vertex subsets give exact minimum
edit counts for the clique, at-most-ell-partite, and mixed target families
on up to ~16 vertices. Weighted quotient instances are solved by direct
set-partition enumeration. These are verification tools: every routine is
exhaustive and independent of the production solver.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

import numpy as np

from . import bitgraph
from .graph import Graph

INF = 1 << 28
MAX_DP_VERTICES = 16


class InstanceTooLargeError(ValueError):
    """The instance exceeds the configured brute-force budget."""


def _dp_modules():
    # Deferred numba import keeps CLI startup light.
    from numba import njit

    @njit(cache=True)
    def edge_counts(masks, n):
        size = 1 << n
        e = np.zeros(size, np.int32)
        for s in range(1, size):
            low = s & (-s)
            v = 0
            t = low
            while t > 1:
                t >>= 1
                v += 1
            rest = s ^ low
            x = masks[v] & rest
            c = 0
            while x:
                x &= x - 1
                c += 1
            e[s] = e[rest] + c
        return e

    @njit(cache=True)
    def class_partition_costs(e, pop, n, r_max):
        # h[r][C]: min edits so C induces a complete graph on exactly r
        # nonempty independent classes (deletions inside classes plus
        # additions across them).
        size = 1 << n
        h = np.full((r_max + 1, size), INF, np.int32)
        for c in range(1, size):
            h[1][c] = e[c]
        for r in range(2, r_max + 1):
            for c in range(1, size):
                if pop[c] < r:
                    continue
                low = c & (-c)
                rest0 = c ^ low
                best = INF
                sub = rest0
                while True:
                    a = low | sub
                    b = c ^ a
                    if b != 0:
                        hp = h[r - 1][b]
                        if hp < INF:
                            cross = e[c] - e[a] - e[b]
                            cost = e[a] + pop[a] * pop[b] - cross + hp
                            if cost < best:
                                best = cost
                    if sub == 0:
                        break
                    sub = (sub - 1) & rest0
                h[r][c] = best
        return h

    @njit(cache=True)
    def partition_dp(comp_cost, e, n):
        size = 1 << n
        mc = np.full(size, INF, np.int32)
        mc[0] = 0
        for s in range(1, size):
            low = s & (-s)
            rest0 = s ^ low
            best = INF
            sub = rest0
            while True:
                comp = low | sub
                outside = s ^ comp
                cc = comp_cost[comp]
                if cc < INF and mc[outside] < INF:
                    cut = e[s] - e[comp] - e[outside]
                    cost = cc + cut + mc[outside]
                    if cost < best:
                        best = cost
                if sub == 0:
                    break
                sub = (sub - 1) & rest0
            mc[s] = best
        return mc[size - 1]

    return edge_counts, class_partition_costs, partition_dp


_compiled = None


def _kernels():
    global _compiled
    if _compiled is None:
        _compiled = _dp_modules()
    return _compiled


def _tables(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if g.n > MAX_DP_VERTICES:
        raise InstanceTooLargeError(
            f"exact subset DP limited to {MAX_DP_VERTICES} vertices, got {g.n}"
        )
    edge_counts, _, _ = _kernels()
    masks = np.array(bitgraph.masks_from_graph(g), dtype=np.int64)
    if g.n == 0:
        return np.zeros(1, np.int32), np.zeros(1, np.int8)
    e = edge_counts(masks, g.n)
    size = 1 << g.n
    pop = np.zeros(size, np.int32)
    for s in range(1, size):
        pop[s] = pop[s >> 1] + (s & 1)
    return e, pop


def cluster_editing_opt(g: Graph) -> int:
    """Minimum edits making every component a clique."""
    if g.n == 0:
        return 0
    e, pop = _tables(g)
    _, _, partition_dp = _kernels()
    comp_cost = (pop * (pop - 1) // 2 - e).astype(np.int32)
    return int(partition_dp(comp_cost, e, g.n))


def _kl_component_costs(g: Graph, ell: int, allow_singletons: bool) -> tuple[np.ndarray, np.ndarray]:
    e, pop = _tables(g)
    _, class_costs, _ = _kernels()
    h = class_costs(e, pop, g.n, min(ell, max(g.n, 1)))
    comp = np.full(e.shape, INF, np.int32)
    for r in range(2, min(ell, g.n) + 1):
        comp = np.minimum(comp, h[r])
    comp[pop == 1] = 0 if allow_singletons else INF
    return comp, e


def kl_cluster_editing_opt(g: Graph, ell: int, allow_singletons: bool = True) -> int:
    """Minimum edits so every component is connected complete r-partite,
    2 <= r <= ell; single-vertex components are allowed by default (a
    one-vertex graph is trivially complete multipartite and connected)."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if g.n == 0:
        return 0
    comp_cost, e = _kl_component_costs(g, ell, allow_singletons)
    _, _, partition_dp = _kernels()
    opt = int(partition_dp(comp_cost, e, g.n))
    if opt >= INF:
        raise ValueError("no feasible target for this family")
    return opt


def bicluster_editing_opt(g: Graph) -> int:
    """Minimum edits so every component is a biclique or a single vertex."""
    return kl_cluster_editing_opt(g, 2)


def l_cluster_editing_opt(g: Graph, ell: int) -> int:
    """Minimum edits so every component is a clique or an r-partite clique
    with r <= ell (exact, by subset DP; independent of the search solver)."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if g.n == 0:
        return 0
    kl_cost, e = _kl_component_costs(g, ell, allow_singletons=True)
    _, pop = _tables(g)
    clique_cost = (pop * (pop - 1) // 2 - e).astype(np.int32)
    comp_cost = np.minimum(kl_cost, clique_cost)
    _, _, partition_dp = _kernels()
    return int(partition_dp(comp_cost, e, g.n))


def is_kl_cluster(g: Graph, ell: int, allow_singletons: bool = True) -> bool:
    """Membership test for the disjoint-union-of-ell-partite-cliques family."""
    masks = bitgraph.masks_from_graph(g)
    return is_kl_cluster_masks(masks, g.n, ell, allow_singletons)


def kl_minimum_solutions(g: Graph, ell: int, opt: int) -> list[tuple[tuple[int, int], ...]]:
    """All edit-pair sets of the given size whose toggle lands in the
    family; used to count distinct minimum solutions on tiny instances."""
    if g.n > 12:
        raise InstanceTooLargeError("solution enumeration limited to 12 vertices")
    masks = bitgraph.masks_from_graph(g)
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    out = []
    for combo in combinations(pairs, opt):
        for u, v in combo:
            bitgraph.toggle_pair(masks, u, v)
        if is_kl_cluster_masks(masks, g.n, ell):
            out.append(combo)
        for u, v in combo:
            bitgraph.toggle_pair(masks, u, v)
    return out


def is_kl_cluster_masks(masks: list[int], n: int, ell: int, allow_singletons: bool = True) -> bool:
    for comp in bitgraph.component_masks(masks, n):
        classes = bitgraph.multipartite_classes(masks, comp)
        if classes is None:
            return False
        if comp.bit_count() == 1:
            if not allow_singletons:
                return False
        elif len(classes) > ell:
            return False
    return True


def set_partitions(items: list) -> Iterable[list[list]]:
    """All partitions of items into nonempty blocks (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]
        yield part + [[first]]


def weighted_cluster_editing_opt(
    n: int,
    edges: Iterable[tuple[int, int]],
    weights: dict[tuple[int, int], int],
) -> int:
    """Exact weighted cluster editing by partition enumeration (n <= 10)."""
    if n > 10:
        raise InstanceTooLargeError("weighted enumeration limited to 10 vertices")
    eset = {(min(u, v), max(u, v)) for u, v in edges}

    def w(u: int, v: int) -> int:
        return weights[(min(u, v), max(u, v))]

    best = math.inf
    for part in set_partitions(list(range(n))):
        block_of = {}
        for i, block in enumerate(part):
            for v in block:
                block_of[v] = i
        cost = 0
        for u in range(n):
            for v in range(u + 1, n):
                same = block_of[u] == block_of[v]
                if same and (u, v) not in eset:
                    cost += w(u, v)
                elif not same and (u, v) in eset:
                    cost += w(u, v)
        best = min(best, cost)
    return int(best)


def weighted_bicluster_editing_opt(
    n: int,
    edges: Iterable[tuple[int, int]],
    weights: dict[tuple[int, int], int],
) -> int:
    """Exact weighted bicluster editing: blocks become bicliques (both
    sides nonempty) or single vertices."""
    if n > 10:
        raise InstanceTooLargeError("weighted enumeration limited to 10 vertices")
    eset = {(min(u, v), max(u, v)) for u, v in edges}

    def w(u: int, v: int) -> int:
        return weights[(min(u, v), max(u, v))]

    def block_cost(block: list[int]) -> int:
        if len(block) == 1:
            return 0
        bestb = math.inf
        first, others = block[0], block[1:]
        for bits_ in range(1 << len(others)):
            side_a = [first] + [x for i, x in enumerate(others) if bits_ >> i & 1]
            side_b = [x for i, x in enumerate(others) if not bits_ >> i & 1]
            if not side_b:
                continue
            cost = 0
            for side in (side_a, side_b):
                for i, u in enumerate(side):
                    for v in side[i + 1 :]:
                        if (min(u, v), max(u, v)) in eset:
                            cost += w(u, v)
            for u in side_a:
                for v in side_b:
                    if (min(u, v), max(u, v)) not in eset:
                        cost += w(u, v)
            bestb = min(bestb, cost)
        return int(bestb)

    best = math.inf
    for part in set_partitions(list(range(n))):
        cost = 0
        for block in part:
            cost += block_cost(sorted(block))
        block_of = {}
        for i, block in enumerate(part):
            for v in block:
                block_of[v] = i
        for u, v in eset:
            if block_of[u] != block_of[v]:
                cost += w(u, v)
        best = min(best, cost)
    return int(best)
