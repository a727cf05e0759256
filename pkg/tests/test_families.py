from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodekit import families as F
from geodekit.distance import DistanceOracle
from geodekit.graph import GraphError, simplicial_vertices
from geodekit.solvers import is_generalized_geodetic

from conftest import connected_graphs, to_nx


def iso(G, H):
    return nx.is_isomorphic(to_nx(G), to_nx(H))


def test_standard_families():
    assert F.complete_multipartite([2, 2, 2]).edges == F.cocktail_party(6).edges
    K = F.complete_multipartite([7, 11])
    assert K.n == 18 and K.m == 77
    assert not K.has_edge(0, 6) and K.has_edge(0, 7)
    assert F.path(1).n == 1 and F.path(1).m == 0
    assert F.star(3).m == 3 and F.star(3).degree(0) == 3


@pytest.mark.parametrize("call", [
    lambda: F.path(0), lambda: F.cycle(2), lambda: F.complete(0),
    lambda: F.complete_multipartite([3]), lambda: F.complete_multipartite([2, 0]),
    lambda: F.tree_from_edges(4, [(0, 1), (1, 2), (2, 0)]),
    lambda: F.split_graph(0, 2), lambda: F.hat_subdivision(F.path(2)),
    lambda: F.h_graph(0, 1, 2), lambda: F.h_graph(1, 1, 1),
    lambda: F.counterexample_highdiam(4, 2, 1),
    lambda: F.clique_tree(F.path(3), [1]),
])
def test_invalid_parameters(call):
    with pytest.raises(GraphError):
        call()


def test_cocktail_odd_order():
    G = F.cocktail_party(7)
    assert G.n == 7 and G.m == comb(7, 2) - 3


def test_split_graph():
    G = F.split_graph(3, 3)
    assert G.n == 6 and G.m == 12
    assert iso(F.split_graph(1, 1), F.path(2))
    out = is_generalized_geodetic(G)
    assert out.value and out.extra["g"] == out.extra["sg"] == 3


def test_subdivision():
    assert iso(F.subdivision(F.complete(3)), F.cycle(6))
    assert iso(F.subdivision(F.path(2)), F.path(3))
    S = F.subdivision(F.complete(4))
    assert (S.n, S.m) == (10, 12)
    # subdivision vertices follow the originals in edge order
    assert S.adj[4] == (0, 1) and S.adj[9] == (2, 3)


def test_hat_subdivision():
    H = F.hat_subdivision(F.complete(4))
    assert (H.n, H.m) == (10, 27)
    H3 = F.hat_subdivision(F.complete(3))
    assert (H3.n, H3.m) == (6, 9)
    assert simplicial_vertices(H) == frozenset(range(4))
    for a, b in combinations(range(4, 10), 2):
        assert H.has_edge(a, b)


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=3, max_n=7))
def test_hat_subdivision_properties(G):
    if G.m < 2:
        return
    H = F.hat_subdivision(G)
    assert H.n == G.n + G.m and H.m == 2 * G.m + comb(G.m, 2)
    assert frozenset(range(G.n)) <= simplicial_vertices(H)
    O = DistanceOracle(H)
    for u, v in combinations(range(G.n), 2):
        assert O.d(u, v) == (2 if G.has_edge(u, v) else 3)


def test_h_graph():
    H = F.h_graph(3, 2, 4)
    assert H.n == 32 == 3 + 2 + (3 * 2 + 3) * 3
    mid = F.h_graph_middle(3, 2, 4)
    assert len(mid) == 9
    for a, b in combinations(mid, 2):
        assert H.has_edge(a, b)
    assert H.has_edge(3, 4)  # the K_s edge stays
    assert DistanceOracle(H).diameter == 4


@pytest.mark.parametrize("k,s,d", [(2, 1, 3), (3, 0, 2), (2, 2, 5), (1, 3, 4), (3, 2, 3)])
def test_h_graph_counts_and_diameter(k, s, d):
    H = F.h_graph(k, s, d)
    assert H.n == k + s + (k * s + comb(k, 2)) * (d - 1)
    assert DistanceOracle(H).diameter == d
    mid = F.h_graph_middle(k, s, d)
    for a, b in combinations(mid, 2):
        assert H.has_edge(a, b)


def test_clique_tree():
    T = F.tree_from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert F.clique_tree(T, [1, 1, 1]).edges == T.edges
    K = F.clique_tree(T, [3, 2, 2])
    assert (K.n, K.m) == (9, 13)
    assert iso(F.clique_tree(F.path(2), [2, 3]), F.complete(5))


def test_counterexample_graph():
    G = F.counterexample_graph(4, 2)
    assert G.n == 17 == 4 + 2 * 6 + 1
    u = G.n - 1
    assert G.degree(u) == 16
    for v in range(4, 16):
        assert G.degree(v) == 3
    O = DistanceOracle(G)
    for i, j in combinations(range(4), 2):
        for l in range(2):
            x = F.counterexample_midpoint(4, 2, i, j, l)
            assert set(G.adj[x]) == {i, j, u}
            # x lies on a geodesic between two originals only for the pair i, j
            for a, b in combinations(range(4), 2):
                assert (x in O.interval(a, b)) == ({a, b} == {i, j})


def test_counterexample_highdiam():
    G = F.counterexample_highdiam(4, 2, 2)
    assert G.n == 45 == 4 + 6 * 2 * 3 + 1 + 4
    assert DistanceOracle(G).diameter == 4
    assert DistanceOracle(F.counterexample_highdiam(4, 2, 3)).diameter == 6


def test_products():
    P, _ = F.cartesian_product(F.path(2), F.path(2))
    assert iso(P, F.cycle(4))
    K, _ = F.cartesian_product(F.complete(3), F.complete(3))
    assert (K.n, K.m) == (9, 18)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=5), connected_graphs(max_n=4))
def test_product_properties(G, H):
    P, vm = F.cartesian_product(G, H)
    assert P.n == G.n * H.n and P.m == G.n * H.m + H.n * G.m
    OG, OH, OP = DistanceOracle(G), DistanceOracle(H), DistanceOracle(P)
    for a in range(P.n):
        assert vm.index(*vm.pair(a)) == a
        for b in range(P.n):
            (g, h), (g2, h2) = vm.pair(a), vm.pair(b)
            assert OP.d(a, b) == OG.d(g, g2) + OH.d(h, h2)
    for h in range(H.n):
        layer = [vm.index(g, h) for g in range(G.n)]
        assert P.induced(layer).edges == G.edges
    for g in range(G.n):
        assert F.project(vm, {vm.index(g, h) for h in range(H.n)}, "G") == frozenset({g})


def test_projection_of_geodesic():
    P, vm = F.cartesian_product(F.path(3), F.path(3))
    O = DistanceOracle(P)
    OG = DistanceOracle(F.path(3))
    for p in O.geodesics(vm.index(0, 0), vm.index(2, 2)):
        q = F.project(vm, p, "G")
        assert q[0] == 0 and q[-1] == 2 and len(q) - 1 == OG.d(0, 2)


@given(st.sets(st.integers(0, 11)), st.sets(st.integers(0, 11)))
def test_projection_of_union(S, T):
    _, vm = F.cartesian_product(F.path(4), F.path(3))
    for f in ("G", "H"):
        assert F.project(vm, S | T, f) == F.project(vm, S, f) | F.project(vm, T, f)
