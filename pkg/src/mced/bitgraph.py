"""Bitmask adjacency helpers for small-graph hot paths.

A graph on n vertices is a list ``masks`` of n ints where bit v of
``masks[u]`` is set iff uv is an edge. All functions are pure; witness
scans return plain tuples so this module has no package dependencies.
"""

from __future__ import annotations

from typing import Iterator


def masks_from_graph(g) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << w
        out.append(m)
    return out


def masks_from_edges(n: int, edges) -> list[int]:
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def bits(mask: int) -> Iterator[int]:
    """Yield set bit indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def toggle_pair(masks: list[int], u: int, v: int) -> None:
    masks[u] ^= 1 << v
    masks[v] ^= 1 << u


def component_masks(masks: list[int], n: int) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def multipartite_classes(masks: list[int], comp: int) -> list[int] | None:
    """Color classes if ``comp`` induces a complete multipartite graph.

    Returns the distinct class masks, or None if the induced subgraph is not
    complete multipartite. A single vertex yields one singleton class.
    """
    size = comp.bit_count()
    classes: dict[int, int] = {}
    total = 0
    for v in bits(comp):
        cls = comp & ~masks[v]
        if cls not in classes:
            classes[cls] = cls.bit_count()
            total += classes[cls]
    if total != size:
        return None
    return list(classes)


def is_l_cluster(masks: list[int], n: int, ell: int) -> bool:
    """True iff every component is a clique or has <= ell color classes."""
    for comp in component_masks(masks, n):
        classes = multipartite_classes(masks, comp)
        if classes is None:
            return False
        if len(classes) > ell and len(classes) != comp.bit_count():
            return False
    return True


def scan_p4(masks: list[int], n: int) -> tuple[int, int, int, int] | None:
    """Lexicographically smallest induced path a-b-c-d, or None."""
    for a in range(n):
        na = masks[a]
        na_closed = na | (1 << a)
        for b in bits(na):
            cm = masks[b] & ~na_closed
            if not cm:
                continue
            for c in bits(cm):
                dm = masks[c] & ~na_closed & ~masks[b]
                if dm:
                    d = (dm & -dm).bit_length() - 1
                    return (a, b, c, d)
    return None


def scan_paw(masks: list[int], n: int) -> tuple[int, int, int, int] | None:
    """Lexicographically smallest (x, y, z, w): triangle xyz plus pendant w on x."""
    for x in range(n):
        nx = masks[x]
        for y in bits(nx):
            zm = nx & masks[y] & ~((1 << (y + 1)) - 1)
            for z in bits(zm):
                wm = nx & ~masks[y] & ~masks[z] & ~(1 << y) & ~(1 << z)
                if wm:
                    w = (wm & -wm).bit_length() - 1
                    return (x, y, z, w)
    return None


def _lexmin_clique(masks: list[int], cand: int, size: int) -> list[int] | None:
    if size == 0:
        return []
    for v in bits(cand):
        rest = _lexmin_clique(masks, cand & masks[v] & ~((1 << (v + 1)) - 1), size - 1)
        if rest is not None:
            return [v] + rest
    return None


def scan_kme(masks: list[int], n: int, ell: int) -> tuple[int, ...] | None:
    """Smallest complete graph on ell+2 vertices minus one edge.

    Returns (a, b, rest...) where ab is the unique non-edge, minimizing the
    tuple (a, b, sorted rest); None if no such induced subgraph exists.
    """
    full = (1 << n) - 1
    for a in range(n):
        non = full & ~masks[a] & ~((1 << (a + 1)) - 1)
        for b in bits(non):
            common = masks[a] & masks[b]
            if common.bit_count() < ell:
                continue
            rest = _lexmin_clique(masks, common, ell)
            if rest is not None:
                return (a, b, *rest)
    return None


def find_witness(masks: list[int], n: int, ell: int) -> tuple[str, tuple[int, ...]] | None:
    """Highest-priority, lexicographically smallest forbidden subgraph.

    Priority is P4, then paw, then the (ell+2)-clique minus an edge; returns
    (kind, vertices) or None when every component is a clique or has at most
    ell color classes.
    """
    hit = scan_p4(masks, n)
    if hit is not None:
        return ("P4", hit)
    hit = scan_paw(masks, n)
    if hit is not None:
        return ("PAW", hit)
    kme = scan_kme(masks, n, ell)
    if kme is not None:
        return ("KME", kme)
    return None
