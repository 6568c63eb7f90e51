import random

import pytest

from mced import bitgraph
from mced.graph import Graph
from mced.recognition import (
    CLIQUE,
    L_CLIQUE,
    OTHER,
    Witness,
    classify_component,
    find_forbidden,
    is_l_cluster_graph,
)

from helpers import (
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    naive_is_l_cluster,
    path,
    paw,
    random_graph,
)


def test_classify_k4():
    assert classify_component(complete(4), range(4), 2).kind == CLIQUE


def test_classify_c4_biclique():
    c = classify_component(cycle(4), range(4), 2)
    assert c.kind == L_CLIQUE and c.part_sizes == (2, 2)


def test_classify_p4_other():
    assert classify_component(path(4), range(4), 2).kind == OTHER


def test_classify_k4_minus_edge_depends_on_ell():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])  # K4 - {2,3}
    c3 = classify_component(g, range(4), 3)
    assert c3.kind == L_CLIQUE and c3.part_sizes == (1, 1, 2)
    assert classify_component(g, range(4), 2).kind == OTHER


def test_classify_requires_component():
    with pytest.raises(ValueError):
        classify_component(path(4), {0, 1}, 2)
    with pytest.raises(ValueError):
        classify_component(disjoint_union(complete(2), complete(2)), range(4), 2)


def test_is_l_cluster_examples():
    assert is_l_cluster_graph(disjoint_union(complete(3), cycle(4)), 2)
    assert not is_l_cluster_graph(path(4), 2)
    assert is_l_cluster_graph(Graph.from_edges(1, []), 2)
    assert is_l_cluster_graph(complete(5), 2)


def test_find_forbidden_p4():
    w = find_forbidden(path(4), 2)
    assert w == Witness("P4", (0, 1, 2, 3))
    assert w.validate(path(4))
    assert w.to_line() == "P4: 0 1 2 3"


def test_find_forbidden_paw():
    w = find_forbidden(paw(), 2)
    assert w.kind == "PAW"
    assert w.validate(paw())
    # Triangle 0,1,2, pendant 3 on 0.
    assert w.vertices == (0, 1, 2, 3)
    assert w.to_line() == "PAW: 0 1 2 / 3"


def test_find_forbidden_kme():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])  # non-edge (2,3)
    w = find_forbidden(g, 2)
    assert w.kind == "KME"
    assert w.vertices[:2] == (2, 3)
    assert w.validate(g)
    assert w.to_line() == "KME: 2 3 | 0 1"


def test_find_forbidden_none_on_clique():
    assert find_forbidden(complete(5), 2) is None


def test_priority_p4_over_paw():
    # Paw plus a far P4: P4 wins even though the paw has smaller vertices.
    g = disjoint_union(paw(), path(4))
    w = find_forbidden(g, 2)
    assert w.kind == "P4" and w.vertices == (4, 5, 6, 7)


def test_agreement_naive_exhaustive_small():
    for n in range(1, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph.from_edges(n, edges)
            for ell in (2, 3):
                mine = is_l_cluster_graph(g, ell)
                assert mine == naive_is_l_cluster(g, ell)
                assert mine == (find_forbidden(g, ell) is None)


def test_agreement_random_n7():
    rnd = random.Random(99)
    for _ in range(300):
        n = rnd.randint(1, 7)
        g = random_graph(rnd, n, rnd.random())
        for ell in (2, 3):
            mine = is_l_cluster_graph(g, ell)
            assert mine == naive_is_l_cluster(g, ell)
            w = find_forbidden(g, ell)
            assert mine == (w is None)
            if w is not None:
                assert w.validate(g)


def test_set_and_mask_witnesses_agree():
    rnd = random.Random(4)
    for _ in range(300):
        n = rnd.randint(1, 8)
        g = random_graph(rnd, n, rnd.random())
        masks = bitgraph.masks_from_graph(g)
        for ell in (2, 3):
            w = find_forbidden(g, ell)
            mw = bitgraph.find_witness(masks, g.n, ell)
            if w is None:
                assert mw is None
            else:
                assert mw == (w.kind, w.vertices)


def test_mask_l_cluster_matches():
    rnd = random.Random(12)
    for _ in range(200):
        n = rnd.randint(0, 8)
        g = random_graph(rnd, n, rnd.random())
        masks = bitgraph.masks_from_graph(g)
        for ell in (2, 3):
            assert bitgraph.is_l_cluster(masks, g.n, ell) == is_l_cluster_graph(g, ell)


def test_witness_is_lexicographically_smallest():
    # Two P4s; the smaller-index one must be reported.
    g = disjoint_union(path(4), path(4))
    assert find_forbidden(g, 2).vertices == (0, 1, 2, 3)
    # Reversed path labels still give ascending path order.
    g2 = Graph.from_edges(4, [(3, 2), (2, 1), (1, 0)])
    assert find_forbidden(g2, 2).vertices == (0, 1, 2, 3)


def test_multipartite_classify_large_ell():
    g = complete_multipartite(3, 3, 2)
    c = classify_component(g, range(8), 3)
    assert c.kind == L_CLIQUE and c.part_sizes == (2, 3, 3)
    assert classify_component(g, range(8), 2).kind == OTHER
