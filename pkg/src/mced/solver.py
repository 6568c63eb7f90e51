"""Exact bounded-budget and optimal solvers plus the enumeration oracle.

solve_bounded kernelizes once at the root, then runs a bounded search tree
on the kernel: pick a forbidden witness, branch on toggling each of its
vertex pairs, never re-toggling a pair along one path. A kernel solution
maps back verbatim to the original instance through the kernel vertex map.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import bitgraph
from .graph import EMPTY_EDITS, EditSet, Graph, apply_edits, toggle_edits
from .kernel import STATUS_NO, STATUS_TRIVIALLY_YES, KernelResult, kernelize
from .oracles import InstanceTooLargeError
from .recognition import is_l_cluster_graph

DEFAULT_ORACLE_PAIR_LIMIT = 28
ORACLE_PAIR_ENV = "MCED_MAX_ORACLE_PAIRS"


class ResourceLimitError(RuntimeError):
    """The configured budget ceiling was exhausted."""


class NotMinimalSolutionError(ValueError):
    """No destructive ordering exists, so the edit set was not minimal."""


@dataclass(frozen=True)
class SolveResult:
    answer: bool
    edits: EditSet | None
    nodes_explored: int
    kernel: KernelResult | None
    max_branching: int = 0


def _branch_bound(ell: int) -> int:
    return (ell + 2) * (ell + 1) // 2


def _witness_pairs(vertices: tuple[int, ...]) -> list[tuple[int, int]]:
    verts = sorted(set(vertices))
    return [(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :]]


def _search(masks, n, ell, budget, blocked, stats) -> list[tuple[int, int]] | None:
    stats[0] += 1
    wit = bitgraph.find_witness(masks, n, ell)
    if wit is None:
        return []
    if budget == 0:
        return None
    pairs = _witness_pairs(wit[1])
    bound = _branch_bound(ell)
    if len(pairs) > bound:  # pragma: no cover - structural invariant
        raise AssertionError(f"branching factor {len(pairs)} exceeds {bound}")
    if len(pairs) > stats[1]:
        stats[1] = len(pairs)
    for u, v in pairs:
        if (u, v) in blocked:
            continue
        bitgraph.toggle_pair(masks, u, v)
        blocked.add((u, v))
        sub = _search(masks, n, ell, budget - 1, blocked, stats)
        bitgraph.toggle_pair(masks, u, v)
        blocked.discard((u, v))
        if sub is not None:
            return [(u, v)] + sub
    return None


def _solve_branch(args) -> tuple[int, list[tuple[int, int]] | None, int, int]:
    index, masks, n, ell, budget, first = args
    masks = list(masks)
    bitgraph.toggle_pair(masks, *first)
    stats = [0, 0]
    sub = _search(masks, n, ell, budget, {first}, stats)
    found = None if sub is None else [first] + sub
    return index, found, stats[0], stats[1]


def solve_bounded(g: Graph, ell: int, k: int, parallel: bool = False) -> SolveResult:
    """Decide whether at most k edits reach the target family.

    On yes, the returned edit set applies to g, has size at most k, and its
    application yields a valid target graph. Branch exploration order is
    deterministic; with ``parallel`` the root branches run in worker
    processes but the answer and the chosen edit set are unchanged.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    kres = kernelize(g, ell, k)
    if kres.status == STATUS_NO:
        return SolveResult(False, None, 0, kres)
    if kres.status == STATUS_TRIVIALLY_YES:
        return SolveResult(True, EMPTY_EDITS, 0, kres)

    kg = kres.graph
    masks = bitgraph.masks_from_graph(kg)
    stats = [0, 0]

    if parallel and k >= 1:
        wit = bitgraph.find_witness(masks, kg.n, ell)
        if wit is None:
            return SolveResult(True, EMPTY_EDITS, 1, kres)
        pairs = _witness_pairs(wit[1])
        stats = [1, len(pairs)]
        jobs = [
            (i, tuple(masks), kg.n, ell, k - 1, pair) for i, pair in enumerate(pairs)
        ]
        results: dict[int, list[tuple[int, int]] | None] = {}
        workers = min(len(jobs), os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for index, found, nodes, maxb in pool.map(_solve_branch, jobs):
                results[index] = found
                stats[0] += nodes
                stats[1] = max(stats[1], maxb)
        found = None
        for i in range(len(pairs)):
            if results[i] is not None:
                found = results[i]
                break
    else:
        found = _search(masks, kg.n, ell, k, set(), stats)

    if found is None:
        return SolveResult(False, None, stats[0], kres, stats[1])
    orig_pairs = [
        (kres.vertex_map[u], kres.vertex_map[v]) for u, v in found
    ]
    edits = toggle_edits(g, [(min(u, v), max(u, v)) for u, v in orig_pairs])
    return SolveResult(True, edits, stats[0], kres, stats[1])


def solve_optimal(
    g: Graph, ell: int, max_k: int | None = None, parallel: bool = False
) -> tuple[int, EditSet]:
    """Smallest budget with a solution, found by increasing k from 0.

    Deleting every edge always yields a valid target (single-vertex
    cliques), so the optimum is at most m; a lower ``max_k`` ceiling raises
    :class:`ResourceLimitError` when exceeded.
    """
    ceiling = g.m if max_k is None else max_k
    for k in range(0, ceiling + 1):
        res = solve_bounded(g, ell, k, parallel=parallel)
        if res.answer:
            return k, res.edits
    raise ResourceLimitError(f"no solution within budget ceiling {ceiling}")


def brute_force_oracle(
    g: Graph, ell: int, k: int, max_pairs: int | None = None
) -> EditSet | None:
    """Ground-truth decision by exhaustive toggle enumeration.

    Tries every set of at most k vertex pairs in lexicographic order and
    returns the first whose toggle lands in the target family, or None.
    Refuses instances with more than the configured pair count when k > 4
    (environment variable MCED_MAX_ORACLE_PAIRS overrides the default 28).
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    total = g.n * (g.n - 1) // 2
    if max_pairs is None:
        max_pairs = int(os.environ.get(ORACLE_PAIR_ENV, DEFAULT_ORACLE_PAIR_LIMIT))
    if total > max_pairs and k > 4:
        raise InstanceTooLargeError(
            f"{total} vertex pairs with k={k} exceeds the oracle budget"
        )
    masks = bitgraph.masks_from_graph(g)
    if bitgraph.is_l_cluster(masks, g.n, ell):
        return EMPTY_EDITS
    all_pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    for size in range(1, k + 1):
        for combo in combinations(all_pairs, size):
            for u, v in combo:
                bitgraph.toggle_pair(masks, u, v)
            good = bitgraph.is_l_cluster(masks, g.n, ell)
            for u, v in combo:
                bitgraph.toggle_pair(masks, u, v)
            if good:
                return toggle_edits(g, combo)
    return None


def oracle_optimum(g: Graph, ell: int, cap: int | None = None) -> int | None:
    """Smallest edit count by enumeration, or None if above ``cap``."""
    limit = g.m if cap is None else cap
    masks = bitgraph.masks_from_graph(g)
    if bitgraph.is_l_cluster(masks, g.n, ell):
        return 0
    all_pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    for size in range(1, limit + 1):
        for combo in combinations(all_pairs, size):
            for u, v in combo:
                bitgraph.toggle_pair(masks, u, v)
            good = bitgraph.is_l_cluster(masks, g.n, ell)
            for u, v in combo:
                bitgraph.toggle_pair(masks, u, v)
            if good:
                return size
    return None


def verify_solution(g: Graph, ell: int, edits: EditSet, k: int) -> bool:
    """True iff the edit set is valid for g, has size at most k, and its
    application is a disjoint union of cliques and at-most-ell-partite
    cliques. Invalid edits raise."""
    if len(edits) > k:
        return False
    return is_l_cluster_graph(apply_edits(g, edits), ell)


def _induces_p4_or_paw(g: Graph, verts: tuple[int, ...]) -> bool:
    edges = sum(1 for i, u in enumerate(verts) for v in verts[i + 1 :] if g.has_edge(u, v))
    degs = sorted(sum(1 for v in verts if v != u and g.has_edge(u, v)) for u in verts)
    return (edges == 3 and degs == [1, 1, 2, 2]) or (edges == 4 and degs == [1, 2, 2, 3])


def _induces_kme(g: Graph, verts: tuple[int, ...]) -> bool:
    k = len(verts)
    edges = sum(1 for i, u in enumerate(verts) for v in verts[i + 1 :] if g.has_edge(u, v))
    return edges == k * (k - 1) // 2 - 1


def _destroys_some_witness(g: Graph, ell: int, u: int, v: int) -> bool:
    # Any forbidden induced subgraph containing both endpoints is destroyed
    # by toggling the pair, since its internal uv state matches the graph.
    others = [x for x in range(g.n) if x != u and x != v]
    for two in combinations(others, 2):
        if _induces_p4_or_paw(g, (u, v, *two)):
            return True
    if len(others) >= ell:
        for rest in combinations(others, ell):
            if _induces_kme(g, (u, v, *rest)):
                return True
    return False


def order_edits_lemma2(g: Graph, ell: int, edits: EditSet) -> EditSet:
    """Reorder a minimal solution so each edit destroys a forbidden
    subgraph present when it is applied.

    Such an ordering exists for every minimal solution; failure to find one
    raises :class:`NotMinimalSolutionError`. Non-solutions are rejected.
    """
    if not is_l_cluster_graph(apply_edits(g, edits), ell):
        raise ValueError("edit set is not a solution")

    ordered: list = []

    def backtrack(current: Graph, remaining: list) -> bool:
        if not remaining:
            return True
        for e in sorted(remaining, key=lambda x: (x.u, x.v)):
            if _destroys_some_witness(current, ell, e.u, e.v):
                ordered.append(e)
                rest = [x for x in remaining if x is not e]
                if backtrack(apply_edits(current, EditSet((e,))), rest):
                    return True
                ordered.pop()
        return False

    if not backtrack(g, list(edits)):
        raise NotMinimalSolutionError(
            "no destructive ordering exists; the edit set is not minimal"
        )
    return EditSet(tuple(ordered))
