"""Recognition of cliques, complete multipartite components, and the
forbidden induced subgraphs (P4, paw, K_{ell+2} minus an edge) that certify
a graph is not a disjoint union of cliques and at-most-ell-partite cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, connected_components

WITNESS_P4 = "P4"
WITNESS_PAW = "PAW"
WITNESS_KME = "KME"


@dataclass(frozen=True)
class Witness:
    """A forbidden induced subgraph occurrence.

    P4: vertices in path order a-b-c-d.
    PAW: triangle x, y, z plus pendant w attached at x.
    KME: ell+2 mutually adjacent vertices except the first two, listed as
    (a, b, rest...) with ab the unique non-edge.
    """

    kind: str
    vertices: tuple[int, ...]

    def to_line(self) -> str:
        v = self.vertices
        if self.kind == WITNESS_P4:
            return "P4: " + " ".join(map(str, v))
        if self.kind == WITNESS_PAW:
            return f"PAW: {v[0]} {v[1]} {v[2]} / {v[3]}"
        return f"KME: {v[0]} {v[1]} | " + " ".join(map(str, v[2:]))

    def validate(self, g: Graph) -> bool:
        """Check that the listed vertices induce exactly the named graph."""
        v = self.vertices
        if len(set(v)) != len(v):
            return False
        if self.kind == WITNESS_P4:
            if len(v) != 4:
                return False
            a, b, c, d = v
            need = {(a, b), (b, c), (c, d)}
        elif self.kind == WITNESS_PAW:
            if len(v) != 4:
                return False
            x, y, z, w = v
            need = {(x, y), (x, z), (y, z), (x, w)}
        else:
            a, b = v[0], v[1]
            pairs = {
                (p, q) for i, p in enumerate(v) for q in v[i + 1 :]
            }
            need = {pq for pq in pairs if set(pq) != {a, b}}
        for i, p in enumerate(v):
            for q in v[i + 1 :]:
                present = g.has_edge(p, q)
                wanted = (p, q) in need or (q, p) in need
                if present != wanted:
                    return False
        return True


CLIQUE = "clique"
L_CLIQUE = "l_clique"
OTHER = "other"


@dataclass(frozen=True)
class ComponentClass:
    """Classification of one connected component.

    kind is 'clique' (with size), 'l_clique' (with ascending color-class
    sizes), or 'other'.
    """

    kind: str
    size: int | None = None
    part_sizes: tuple[int, ...] | None = None


def _neighborhood_classes(g: Graph, comp: frozenset[int]) -> list[frozenset[int]] | None:
    """Color classes if comp induces a complete multipartite graph, else None.

    Vertices of a complete multipartite component share adjacency exactly
    with their non-class, so grouping by neighborhood and checking sizes
    decides the shape without any subgraph scan. Assumes comp is closed
    under adjacency (a whole connected component).
    """
    size = len(comp)
    groups: dict[frozenset[int], int] = {}
    for v in comp:
        groups[g.adj[v]] = groups.get(g.adj[v], 0) + 1
    if sum(groups.values()) != size:  # pragma: no cover - arithmetic identity
        return None
    for key, cnt in groups.items():
        if len(key) != size - cnt:
            return None
    return [comp - key for key in groups]


def classify_component(g: Graph, comp: Iterable[int], ell: int) -> ComponentClass:
    """Classify one connected component of g against the target family.

    Raises ValueError when comp is not exactly a connected component.
    """
    cset = frozenset(comp)
    if not cset:
        raise ValueError("empty component")
    for v in cset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        if not g.adj[v] <= cset:
            raise ValueError("vertex set is not closed under adjacency")
    # Closed and must be connected to be a component.
    seen = {min(cset)}
    stack = [min(cset)]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != cset:
        raise ValueError("vertex set is not connected")

    classes = _neighborhood_classes(g, cset)
    if classes is None:
        return ComponentClass(OTHER)
    r = len(classes)
    if r == len(cset):
        return ComponentClass(CLIQUE, size=len(cset))
    if r <= ell:
        return ComponentClass(L_CLIQUE, part_sizes=tuple(sorted(len(c) for c in classes)))
    return ComponentClass(OTHER)


def is_l_cluster_graph(g: Graph, ell: int) -> bool:
    """True iff every component is a clique or a connected complete
    r-partite graph with r <= ell."""
    for comp in connected_components(g):
        if classify_component(g, comp, ell).kind == OTHER:
            return False
    return True


def _scan_p4(g: Graph) -> tuple[int, int, int, int] | None:
    for a in range(g.n):
        na = g.adj[a]
        for b in sorted(na):
            cands = g.adj[b] - na - {a}
            for c in sorted(cands):
                dm = g.adj[c] - na - g.adj[b] - {a}
                if dm:
                    return (a, b, c, min(dm))
    return None


def _scan_paw(g: Graph) -> tuple[int, int, int, int] | None:
    for x in range(g.n):
        nx = g.adj[x]
        for y in sorted(nx):
            for z in sorted(nx & g.adj[y]):
                if z <= y:
                    continue
                wm = nx - g.adj[y] - g.adj[z] - {y, z}
                if wm:
                    return (x, y, z, min(wm))
    return None


def _lexmin_clique(g: Graph, cands: frozenset[int], size: int, floor: int) -> list[int] | None:
    if size == 0:
        return []
    for v in sorted(cands):
        if v <= floor:
            continue
        rest = _lexmin_clique(g, cands & g.adj[v], size - 1, v)
        if rest is not None:
            return [v] + rest
    return None


def _scan_kme(g: Graph, ell: int) -> tuple[int, ...] | None:
    all_v = frozenset(range(g.n))
    for a in range(g.n):
        non = all_v - g.adj[a]
        for b in sorted(non):
            if b <= a:
                continue
            common = g.adj[a] & g.adj[b]
            if len(common) < ell:
                continue
            rest = _lexmin_clique(g, common, ell, -1)
            if rest is not None:
                return (a, b, *rest)
    return None


def find_forbidden(g: Graph, ell: int) -> Witness | None:
    """Find a forbidden induced subgraph, or None when g is a valid target.

    Deterministic: returns the lexicographically smallest witness of the
    highest-priority kind present (P4, then paw, then K_{ell+2} minus an
    edge). The membership test runs first so valid graphs exit in near
    linear time without any scan.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if is_l_cluster_graph(g, ell):
        return None
    hit = _scan_p4(g)
    if hit is not None:
        return Witness(WITNESS_P4, hit)
    hit = _scan_paw(g)
    if hit is not None:
        return Witness(WITNESS_PAW, hit)
    kme = _scan_kme(g, ell)
    if kme is not None:
        return Witness(WITNESS_KME, kme)
    raise AssertionError("component classification and witness scans disagree")
