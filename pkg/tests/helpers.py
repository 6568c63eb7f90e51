"""Shared test utilities: tiny graph builders, random samplers, and the
independent brute-force oracles (strong-module tree enumeration, naive
forbidden-subset scan) that the production code is checked against."""

from __future__ import annotations

import random
from itertools import combinations

from mced.graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_multipartite(*sizes: int) -> Graph:
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for i, blk_a in enumerate(bounds):
        for blk_b in bounds[i + 1 :]:
            for u in blk_a:
                for v in blk_b:
                    edges.append((u, v))
    return Graph.from_edges(start, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def paw() -> Graph:
    # Triangle 0,1,2 with pendant 3 attached at 0.
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p
    ]
    return Graph.from_edges(n, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph on n vertices from an edge bitmask over lexicographic pairs."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int):
    """Yield every labeled graph on n vertices (2^C(n,2) of them)."""
    total = n * (n - 1) // 2
    for mask in range(1 << total):
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# Brute-force strong-module decomposition tree (oracle for decompose).


def _is_module_mask(masks: list[int], n: int, sub: int) -> bool:
    outside = ((1 << n) - 1) & ~sub
    size = sub.bit_count()
    om = outside
    while om:
        low = om & -om
        w = low.bit_length() - 1
        om ^= low
        inter = masks[w] & sub
        if inter != 0 and inter.bit_count() != size:
            return False
    return True


def _connected_mask(masks: list[int], sub: int) -> bool:
    if sub == 0:
        return True
    low = sub & -sub
    comp = low
    frontier = low
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= masks[b.bit_length() - 1]
            m ^= b
        nxt &= sub & ~comp
        comp |= nxt
        frontier = nxt
    return comp == sub


def brute_md_canon(g: Graph):
    """Canonical nested-tuple form of the strong-module containment tree.

    Enumerates every module, filters the strong ones (overlapping no other
    module), builds the tree by smallest strict superset, and labels each
    internal node by connectivity of the induced subgraph / complement.
    """
    n = g.n
    if n == 0:
        return None
    masks = []
    for v in range(n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << w
        masks.append(m)
    comp_masks = [(~masks[v]) & ((1 << n) - 1) & ~(1 << v) for v in range(n)]

    modules = [
        sub
        for sub in range(1, 1 << n)
        if sub.bit_count() >= 1 and _is_module_mask(masks, n, sub)
    ]
    strong = []
    for m in modules:
        ok = True
        for m2 in modules:
            inter = m & m2
            if inter and inter != m and inter != m2:
                ok = False
                break
        if ok:
            strong.append(m)

    strong.sort(key=lambda s: s.bit_count())
    parent: dict[int, int | None] = {}
    for i, m in enumerate(strong):
        parent[m] = None
        for m2 in strong[i + 1 :]:
            if m2 != m and (m & m2) == m:
                parent[m] = m2
                break
    children: dict[int, list[int]] = {m: [] for m in strong}
    for m, p in parent.items():
        if p is not None:
            children[p].append(m)

    def label(sub: int) -> str:
        if not _connected_mask(masks, sub):
            return "P"
        if not _connected_mask(comp_masks, sub):
            return "S"
        return "N"

    def _min_vertex(t):
        if t[0] == "LEAF":
            return t[1]
        return min(_min_vertex(c) for c in t[1])

    def canon(sub: int):
        if sub.bit_count() == 1:
            return ("LEAF", sub.bit_length() - 1)
        kids = sorted((canon(c) for c in children[sub]), key=_min_vertex)
        return (label(sub), tuple(kids))

    root = strong[-1]
    return canon(root)


def md_tree_canon(tree):
    """Same canonical form for a production decomposition tree."""
    if tree.root is None:
        return None

    def canon(nd):
        if nd.is_leaf():
            return ("LEAF", nd.vertex)
        return (nd.label, tuple(canon(c) for c in nd.children))

    return canon(tree.root)


# ---------------------------------------------------------------------------
# Naive forbidden-subgraph scan (oracle for recognition).


def _induced_degseq(masks: list[int], verts: tuple[int, ...]) -> tuple[list[int], int]:
    sub = 0
    for v in verts:
        sub |= 1 << v
    degs = sorted((masks[v] & sub).bit_count() for v in verts)
    return degs, sum(degs) // 2


def naive_is_l_cluster(g: Graph, ell: int) -> bool:
    """Exhaustive subset scan for P4, paw, and K_{ell+2} minus an edge."""
    n = g.n
    masks = []
    for v in range(n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << w
        masks.append(m)
    for quad in combinations(range(n), 4):
        degs, edges = _induced_degseq(masks, quad)
        if edges == 3 and degs == [1, 1, 2, 2]:
            return False
        if edges == 4 and degs == [1, 2, 2, 3]:
            return False
    r = ell + 2
    for sub in combinations(range(n), r):
        _, edges = _induced_degseq(masks, sub)
        if edges == r * (r - 1) // 2 - 1:
            return False
    return True
