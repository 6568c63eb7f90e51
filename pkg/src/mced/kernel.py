"""Kernelization pipeline for bounded-budget mixed cluster editing.

Stages: drop components that already belong to the target family, reject
instances whose quotient exceeds the structural bounds implied by a budget
of k edits, then cap the size of every P- and S-vertex of the quotient.
The whole pipeline is pure and safe to run concurrently on different
instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (
    KIND_PARALLEL,
    KIND_SERIES,
    KIND_UNIT,
    LABEL_PARALLEL,
    LABEL_SERIES,
    MDTree,
    QuotientGraph,
    decompose,
    q_partition,
    quotient_graph,
)
from .graph import Graph, connected_components, induced_subgraph
from .recognition import OTHER, classify_component

STATUS_KERNEL = "kernel"
STATUS_NO = "no"
STATUS_TRIVIALLY_YES = "trivially_yes"


@dataclass(frozen=True)
class KernelStats:
    components_removed: int
    vertices_truncated: int
    quotient_size: int | None


@dataclass(frozen=True)
class KernelResult:
    """Outcome of kernelization.

    status 'kernel' carries the reduced graph plus the injective map from
    kernel vertices back to original vertices; 'no' carries the violated
    bound; 'trivially_yes' means everything was removed as already valid.
    """

    status: str
    graph: Graph | None
    vertex_map: tuple[int, ...] | None
    reason: str | None
    stats: KernelStats

    def size_bound(self, ell: int, k: int) -> int:
        return 2 * ell * k * (k + 2) + 2 * k * (ell + k + 1)


def remove_trivial_components(g: Graph, ell: int) -> tuple[Graph, list[frozenset[int]]]:
    """Drop every component that is already a clique or an r-partite clique
    with r <= ell; the optimum edit distance is unchanged.

    The returned graph is relabelled densely by ascending original vertex
    id; the removed components are reported in original ids.
    """
    removed: list[frozenset[int]] = []
    keep: list[int] = []
    for comp in connected_components(g):
        if classify_component(g, comp, ell).kind == OTHER:
            keep.extend(comp)
        else:
            removed.append(comp)
    sub, _ = induced_subgraph(g, keep)
    return sub, removed


def quotient_size_filter(g: Graph, ell: int, k: int) -> str | None:
    """Certified no-instance check; returns the violated bound or None.

    For a graph with no trivial components that can be edited into the
    target family with at most k edits, the quotient has at most (2*ell+2)*k
    vertices, at most 2*ell*k P-vertices and at most 2*k S-vertices, and the
    graph has at most 2*k components.
    """
    tree = decompose(g)
    q = quotient_graph(g, q_partition(tree))
    return _filter_on_quotient(g, q, ell, k)


def _filter_on_quotient(g: Graph, q: QuotientGraph, ell: int, k: int) -> str | None:
    u = p = s = 0
    for v in q.vertices:
        if v.kind == KIND_UNIT:
            u += 1
        elif v.kind == KIND_PARALLEL:
            p += 1
        else:
            s += 1
    if u + p + s > (2 * ell + 2) * k:
        return "quotient bound (2l+2)k exceeded"
    if p > 2 * ell * k:
        return "P-vertex bound 2lk exceeded"
    if s > 2 * k:
        return "S-vertex bound 2k exceeded"
    if len(connected_components(g)) > 2 * k:
        return "component bound 2k exceeded"
    return None


@dataclass(frozen=True)
class TruncationRecord:
    kind: str
    size_before: int
    size_after: int


@dataclass(frozen=True)
class TruncationLog:
    records: tuple[TruncationRecord, ...]
    kept: tuple[int, ...]

    @property
    def vertices_truncated(self) -> int:
        return sum(r.size_before - r.size_after for r in self.records)


def truncate_modules(g: Graph, ell: int, k: int) -> tuple[Graph, TruncationLog]:
    """Cap P-vertices of the quotient at k+2 members and S-vertices at
    ell+k+1 members, keeping the lowest-numbered members of each.

    Answer-preserving for budget k: a P-vertex at the cap can never be
    split or touched by a solution of size at most k, and likewise for a
    capped S-vertex, so dropped members mirror the kept ones.
    """
    tree = decompose(g)
    q = quotient_graph(g, q_partition(tree))
    return _truncate_on_quotient(g, q, ell, k)


def _truncate_on_quotient(
    g: Graph, q: QuotientGraph, ell: int, k: int
) -> tuple[Graph, TruncationLog]:
    p_cap = k + 2
    s_cap = ell + k + 1
    keep: list[int] = []
    records: list[TruncationRecord] = []
    for v in q.vertices:
        cap = None
        if v.kind == KIND_PARALLEL and len(v.members) > p_cap:
            cap = p_cap
        elif v.kind == KIND_SERIES and len(v.members) > s_cap:
            cap = s_cap
        if cap is None:
            keep.extend(v.members)
        else:
            keep.extend(v.members[:cap])
            records.append(TruncationRecord(v.kind, len(v.members), cap))
    sub, old_ids = induced_subgraph(g, keep)
    return sub, TruncationLog(tuple(records), old_ids)


def kernelize(g: Graph, ell: int, k: int) -> KernelResult:
    """Full kernelization: trivial-component removal, quotient-size
    rejection, then module truncation.

    The instance is solvable with at most k edits iff the kernel is, and a
    kernel solution is verbatim a solution of the original instance under
    the vertex map. On status 'kernel' the graph has at most
    2*ell*k*(k+2) + 2*k*(ell+k+1) vertices.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    g1, removed = remove_trivial_components(g, ell)
    dropped = set()
    for comp in removed:
        dropped |= comp
    kept1 = tuple(v for v in range(g.n) if v not in dropped)

    if g1.n == 0:
        return KernelResult(
            STATUS_TRIVIALLY_YES,
            None,
            (),
            None,
            KernelStats(len(removed), 0, None),
        )

    tree = decompose(g1)
    q = quotient_graph(g1, q_partition(tree))
    reason = _filter_on_quotient(g1, q, ell, k)
    if reason is not None:
        return KernelResult(
            STATUS_NO,
            None,
            None,
            reason,
            KernelStats(len(removed), 0, q.n),
        )

    g2, log = _truncate_on_quotient(g1, q, ell, k)
    vertex_map = tuple(kept1[old] for old in log.kept)
    stats = KernelStats(len(removed), log.vertices_truncated, q.n)
    bound = 2 * ell * k * (k + 2) + 2 * k * (ell + k + 1)
    if g2.n > bound:  # pragma: no cover - guarded by the size filter
        raise AssertionError(f"kernel has {g2.n} vertices, bound is {bound}")
    return KernelResult(STATUS_KERNEL, g2, vertex_map, None, stats)


@dataclass(frozen=True)
class WeightedQuotientInstance:
    """Weighted editing instance over module groups.

    Quotient vertex i stands for the original vertex set members[i]; the
    weight of every pair (i, j), edge or non-edge, is
    len(members[i]) * len(members[j]), the number of underlying pairs.
    """

    members: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.members)

    def weight(self, i: int, j: int) -> int:
        return len(self.members[i]) * len(self.members[j])

    def pair_weights(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): self.weight(i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        }


def _grouped_quotient(g: Graph, tree: MDTree, label: str) -> WeightedQuotientInstance:
    grouped: list[tuple[int, ...]] = []
    taken: set[int] = set()
    if tree.root is not None and not tree.root.is_leaf():
        stack = [tree.root]
        while stack:
            nd = stack.pop()
            leaves = sorted(c.vertex for c in nd.children if c.is_leaf())
            if nd.label == label and len(leaves) >= 2:
                grouped.append(tuple(leaves))
                taken.update(leaves)
            stack.extend(c for c in nd.children if not c.is_leaf())
    parts = grouped + [(v,) for v in range(g.n) if v not in taken]
    parts.sort(key=lambda t: t[0])
    index: dict[int, int] = {}
    for i, part in enumerate(parts):
        for v in part:
            index[v] = i
    edges: set[tuple[int, int]] = set()
    for i, part in enumerate(parts):
        rep = part[0]
        for w in g.adj[rep]:
            j = index[w]
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return WeightedQuotientInstance(tuple(parts), frozenset(edges))


def build_weighted_s_quotient(g: Graph) -> WeightedQuotientInstance:
    """Group the leaf children of every series node (critical cliques);
    all other vertices stay singletons. Pair weights are member-count
    products, turning unit-weight cluster editing into an equivalent
    weighted instance on the quotient."""
    return _grouped_quotient(g, decompose(g), LABEL_SERIES)


def build_weighted_p_quotient(g: Graph) -> WeightedQuotientInstance:
    """Symmetric to the series version with parallel-node leaf children
    (critical independent sets) grouped; serves the biclique target."""
    return _grouped_quotient(g, decompose(g), LABEL_PARALLEL)
