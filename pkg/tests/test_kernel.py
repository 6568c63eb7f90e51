import random
from itertools import combinations

import pytest

from mced.decomposition import decompose, q_partition, quotient_of
from mced.graph import Graph, apply_edits, connected_components, toggle_edits
from mced.kernel import (
    STATUS_KERNEL,
    STATUS_NO,
    STATUS_TRIVIALLY_YES,
    build_weighted_p_quotient,
    build_weighted_s_quotient,
    kernelize,
    quotient_size_filter,
    remove_trivial_components,
    truncate_modules,
)
from mced.oracles import (
    bicluster_editing_opt,
    cluster_editing_opt,
    l_cluster_editing_opt,
    weighted_bicluster_editing_opt,
    weighted_cluster_editing_opt,
)
from mced.solver import oracle_optimum, verify_solution

from helpers import (
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    edgeless,
    path,
    paw,
    random_graph,
)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_remove_trivial_k3_p4():
    g = disjoint_union(complete(3), path(4))
    out, removed = remove_trivial_components(g, 2)
    assert removed == [frozenset({0, 1, 2})]
    assert out.n == 4 and out.m == 3  # the P4, relabelled


def test_remove_trivial_everything():
    g = disjoint_union(cycle(4), cycle(4))
    out, removed = remove_trivial_components(g, 2)
    assert out.n == 0 and len(removed) == 2


def test_remove_trivial_keeps_p4():
    out, removed = remove_trivial_components(path(4), 2)
    assert removed == [] and out.n == 4


def test_filter_p4_passes():
    assert quotient_size_filter(path(4), 2, 1) is None


def test_filter_many_p4s_rejects():
    g = disjoint_union(*[path(4) for _ in range(10)])
    reason = quotient_size_filter(g, 2, 1)
    assert reason == "quotient bound (2l+2)k exceeded"


def test_filter_empty_graph_passes():
    assert quotient_size_filter(Graph.from_edges(0, []), 2, 3) is None


def test_truncate_star_leaves():
    g, log = truncate_modules(star(10), 2, 1)
    assert g.n == 4  # center + k+2 = 3 leaves
    assert log.records[0].kind == "P"
    assert log.records[0].size_before == 10 and log.records[0].size_after == 3
    # Optimum and decision agree before and after (both already valid).
    assert oracle_optimum(star(10), 2, cap=2) == oracle_optimum(g, 2, cap=2) == 0


def test_truncate_clique_with_pendant():
    base = complete(12)
    g = Graph.from_edges(13, list(base.edges()) + [(0, 12)])
    out, log = truncate_modules(g, 2, 1)
    # S-vertex {1..11} capped at ell+k+1 = 4.
    assert any(r.kind == "S" and r.size_after == 4 for r in log.records)
    assert out.n == 6  # vertex 0, four clique members, pendant
    assert oracle_optimum(g, 2, cap=2) == oracle_optimum(out, 2, cap=2) == 1


def test_truncate_small_modules_untouched():
    g = paw()
    out, log = truncate_modules(g, 2, 1)
    assert out == g and log.records == ()


def test_kernelize_trivially_yes():
    res = kernelize(disjoint_union(cycle(4), complete(3)), 2, 0)
    assert res.status == STATUS_TRIVIALLY_YES
    assert res.stats.components_removed == 2


def test_kernelize_no_by_filter():
    g = disjoint_union(*[path(4) for _ in range(10)])
    res = kernelize(g, 2, 1)
    assert res.status == STATUS_NO
    assert res.reason == "quotient bound (2l+2)k exceeded"


def test_kernelize_paw_already_small():
    res = kernelize(paw(), 2, 1)
    assert res.status == STATUS_KERNEL
    assert res.graph == paw()
    assert res.vertex_map == (0, 1, 2, 3)


def test_kernelize_k0_nontrivial_is_no():
    res = kernelize(path(4), 2, 0)
    assert res.status == STATUS_NO


def test_kernel_size_bound_and_soundness_sampled():
    rnd = random.Random(77)
    for _ in range(250):
        n = rnd.randint(1, 7)
        g = random_graph(rnd, n, rnd.random())
        for ell in (2, 3):
            for k in range(0, 4):
                res = kernelize(g, ell, k)
                opt = oracle_optimum(g, ell, cap=k + 1)
                yes = opt is not None and opt <= k
                if res.status == STATUS_NO:
                    assert not yes
                elif res.status == STATUS_TRIVIALLY_YES:
                    assert yes and opt == 0
                else:
                    bound = 2 * ell * k * (k + 2) + 2 * k * (ell + k + 1)
                    assert res.graph.n <= bound
                    kopt = oracle_optimum(res.graph, ell, cap=k + 1)
                    kyes = kopt is not None and kopt <= k
                    assert kyes == yes


def test_kernelize_idempotent():
    rnd = random.Random(13)
    checked = 0
    for _ in range(300):
        n = rnd.randint(1, 8)
        g = random_graph(rnd, n, rnd.random())
        ell = rnd.choice([2, 3])
        k = rnd.randint(1, 3)
        res = kernelize(g, ell, k)
        if res.status != STATUS_KERNEL:
            continue
        res2 = kernelize(res.graph, ell, k)
        assert res2.status == STATUS_KERNEL
        assert res2.graph == res.graph
        checked += 1
    assert checked > 20


def test_planted_one_edit_quotient_bounds():
    # A valid target graph one edit away, after trivial removal, has a
    # small quotient: at most 2*ell+2 vertices, 2*ell P-vertices, 2 S-vertices.
    rnd = random.Random(3)
    for _ in range(150):
        ell = rnd.choice([2, 3])
        sizes = [rnd.randint(1, 5) for _ in range(rnd.randint(1, 3))]
        if sum(sizes) < 2:
            sizes.append(2)
        from mced.gadgets import gen_planted

        g, _ = gen_planted(len(sizes), sizes, ell, 1, rnd.randrange(1 << 30))
        g1, _ = remove_trivial_components(g, ell)
        if g1.n == 0:
            continue
        u, p, s = (0, 0, 0)
        from mced.decomposition import count_kinds

        u, p, s = count_kinds(quotient_of(g1))
        assert u + p + s <= 2 * ell + 2
        assert p <= 2 * ell
        assert s <= 2


def test_weighted_s_quotient_examples():
    inst = build_weighted_s_quotient(complete(4))
    assert inst.n == 1 and inst.edges == frozenset()

    inst = build_weighted_s_quotient(path(3))
    assert inst.n == 3 and all(len(m) == 1 for m in inst.members)

    g = disjoint_union(complete(2), complete(2))
    inst = build_weighted_s_quotient(g)
    assert inst.n == 2
    assert inst.edges == frozenset()
    assert inst.weight(0, 1) == 4


def test_weighted_p_quotient_examples():
    inst = build_weighted_p_quotient(edgeless(5))
    assert inst.n == 1 and inst.members[0] == (0, 1, 2, 3, 4)

    inst = build_weighted_p_quotient(cycle(4))
    assert inst.n == 2 and inst.weight(0, 1) == 4
    assert inst.edges == frozenset({(0, 1)})

    inst = build_weighted_p_quotient(cycle(5))
    assert inst.n == 5


def test_weighted_quotient_equivalence_sampled():
    rnd = random.Random(101)
    for _ in range(60):
        n = rnd.randint(1, 6)
        g = random_graph(rnd, n, rnd.random())
        s_inst = build_weighted_s_quotient(g)
        assert weighted_cluster_editing_opt(
            s_inst.n, s_inst.edges, s_inst.pair_weights()
        ) == cluster_editing_opt(g)
        p_inst = build_weighted_p_quotient(g)
        assert weighted_bicluster_editing_opt(
            p_inst.n, p_inst.edges, p_inst.pair_weights()
        ) == bicluster_editing_opt(g)


# ---------------------------------------------------------------------------
# Forced P-vertex split: an instance where every optimal solution must
# distribute one independent module across several target units, which is
# why truncation keeps k+2 members rather than k+1.


def _cliques_joined_to_module(m: int, a: int, b: int) -> tuple[Graph, frozenset[int]]:
    mod = list(range(m))
    ca = list(range(m, m + a))
    cb = list(range(m + a, m + a + b))
    edges = [(x, y) for x in mod for y in ca + cb]
    edges += [(u, v) for i, u in enumerate(ca) for v in ca[i + 1 :]]
    edges += [(u, v) for i, u in enumerate(cb) for v in cb[i + 1 :]]
    return Graph.from_edges(m + a + b, edges), frozenset(mod)


def _best_cost_keeping_module_whole(g: Graph, mod: frozenset[int], ell: int) -> int:
    # Exact optimum over solutions that keep `mod` inside a single target
    # unit (one color class or one clique), by contracting it to a weighted
    # node and running a weighted partition DP with per-component
    # clique/bipartition costs. Only correct because `mod` is a module.
    assert ell == 2
    others = sorted(set(range(g.n)) - mod)
    nodes = [tuple(sorted(mod))] + [(v,) for v in others]
    size = [len(t) for t in nodes]
    q = len(nodes)
    rep = [t[0] for t in nodes]
    adj = [
        [g.has_edge(rep[i], rep[j]) for j in range(q)] for i in range(q)
    ]

    def pair_w(i, j):
        return size[i] * size[j]

    def internal_missing(i):
        # Pairs inside the contracted node that a clique target must add.
        return size[i] * (size[i] - 1) // 2

    full = (1 << q) - 1

    def members(mask):
        return [i for i in range(q) if mask >> i & 1]

    def clique_cost(mask):
        mem = members(mask)
        cost = sum(internal_missing(i) for i in mem)
        for x, i in enumerate(mem):
            for j in mem[x + 1 :]:
                if not adj[i][j]:
                    cost += pair_w(i, j)
        return cost

    def biclique_cost(mask):
        mem = members(mask)
        if len(mem) == 1:
            # Single node: valid as one class only if it is a lone vertex
            # group (an edgeless component must be single vertices).
            return 0 if size[mem[0]] == 1 else None
        best = None
        rest = mem[1:]
        for bits in range(1 << len(rest)):
            a_side = [mem[0]] + [x for t, x in enumerate(rest) if bits >> t & 1]
            b_side = [x for t, x in enumerate(rest) if not bits >> t & 1]
            if not b_side:
                continue
            cost = 0
            for side in (a_side, b_side):
                for x, i in enumerate(side):
                    for j in side[x + 1 :]:
                        if adj[i][j]:
                            cost += pair_w(i, j)
            for i in a_side:
                for j in b_side:
                    if not adj[i][j]:
                        cost += pair_w(i, j)
            if best is None or cost < best:
                best = cost
        return best

    comp_cost = {}
    for mask in range(1, full + 1):
        opts = [clique_cost(mask)]
        bc = biclique_cost(mask)
        if bc is not None:
            opts.append(bc)
        comp_cost[mask] = min(opts)

    cut_w = {}

    def cut(maska, maskb):
        cost = 0
        for i in members(maska):
            for j in members(maskb):
                if adj[i][j]:
                    cost += pair_w(i, j)
        return cost

    INF = 1 << 30
    mc = [INF] * (full + 1)
    mc[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        rest0 = mask ^ low
        sub = rest0
        while True:
            comp = low | sub
            outside = mask ^ comp
            cost = comp_cost[comp] + cut(comp, outside) + mc[outside]
            if cost < mc[mask]:
                mc[mask] = cost
            if sub == 0:
                break
            sub = (sub - 1) & rest0
    return mc[full]


def test_unavoidable_p_vertex_split():
    g, mod = _cliques_joined_to_module(3, 4, 5)
    q = quotient_of(g)
    assert any(v.kind == "P" and frozenset(v.members) == mod for v in q.vertices)

    opt = l_cluster_editing_opt(g, 2)
    assert opt == 14

    # Explicit optimal solution that splits the module: one member joins
    # the first clique, the other two join the second as a pair.
    a = list(range(3, 7))
    b = list(range(7, 12))
    pairs = [(0, y) for y in b] + [(x, y) for x in (1, 2) for y in a] + [(1, 2)]
    edits = toggle_edits(g, pairs)
    assert len(edits) == opt
    assert verify_solution(g, 2, edits, opt)
    edited = apply_edits(g, edits)
    parts = q_partition(decompose(edited))
    assert not any(mod <= set(p) for p in parts)

    # Any solution keeping the module inside one target unit pays more, so
    # every optimal solution splits it.
    assert _best_cost_keeping_module_whole(g, mod, 2) == opt + 1
