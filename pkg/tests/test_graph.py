import pytest

from geodekit import families as F
from geodekit.graph import (
    DisconnectedGraphError,
    GraphError,
    build_graph,
    from_mask,
    iter_mask,
    popcount,
    simplicial_vertices,
    to_mask,
)


def test_p2():
    G = build_graph(2, [(0, 1)])
    assert G.n == 2 and G.m == 1 and G.connected
    assert G.adj == ((1,), (0,))


def test_c4():
    G = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert G.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert all(G.degree(v) == 2 for v in range(4))


def test_k4():
    G = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert G.m == 6 and G.is_complete()


def test_neighbour_lists_sorted_and_symmetric():
    G = build_graph(5, [(4, 0), (2, 0), (3, 0), (1, 0), (4, 3)])
    assert G.adj[0] == (1, 2, 3, 4)
    for u in range(5):
        for v in G.adj[u]:
            assert u in G.adj[v]


@pytest.mark.parametrize("edges,kind", [
    ([(0, 0)], "loop"),
    ([(0, 1), (1, 0)], "duplicate"),
    ([(0, 3)], "range"),
    ([(-1, 1)], "range"),
])
def test_bad_edges(edges, kind):
    with pytest.raises(GraphError) as exc:
        build_graph(3, edges)
    assert exc.value.kind == kind


def test_disconnected_is_flagged_then_rejected():
    G = build_graph(4, [(0, 1), (2, 3)])
    assert not G.connected
    with pytest.raises(DisconnectedGraphError):
        G.require_connected()


def test_masks_round_trip():
    s = {0, 3, 7, 64}
    m = to_mask(s)
    assert from_mask(m) == frozenset(s)
    assert list(iter_mask(m)) == sorted(s)
    assert popcount(m) == 4


def test_relabel_and_induced():
    G = F.path(4)
    H = G.relabel([3, 2, 1, 0])
    assert H.edges == G.edges
    sub = F.cycle(6).induced([0, 1, 2])
    assert sub.edges == ((0, 1), (1, 2))


def test_simplicial_complete():
    assert simplicial_vertices(F.complete(5)) == frozenset(range(5))


def test_simplicial_hat_k4_is_originals():
    assert simplicial_vertices(F.hat_subdivision(F.complete(4))) == frozenset(range(4))


def test_simplicial_cycle_empty():
    assert simplicial_vertices(F.cycle(6)) == frozenset()


def test_simplicial_tree_leaves():
    T = F.tree_from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert simplicial_vertices(T) == frozenset({0, 2, 4})
