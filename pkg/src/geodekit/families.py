"""Graph family constructors, the Cartesian product and its projections.

Numbering convention: original vertices come first, auxiliary vertices follow
in the order of the edges (or pairs) they were created for.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from .graph import Graph, GraphError, build_graph


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message, kind="parameter")


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts occupy contiguous index ranges in the given order."""
    _require(len(parts) >= 2 and all(p >= 1 for p in parts),
             "complete multipartite graph needs >= 2 parts of size >= 1")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def cocktail_party(n: int) -> Graph:
    """K_{2,...,2} on n vertices; for odd n the last part is a singleton."""
    _require(n >= 2, "cocktail party graph needs n >= 2")
    return complete_multipartite([2] * (n // 2) + [1] * (n % 2))


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    _require(k >= 1, "star needs k >= 1")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    T = build_graph(n, edges)
    _require(n >= 1 and T.m == n - 1 and T.connected, "edges do not form a tree")
    return T


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.connected and G.m == G.n - 1


def leaves(T: Graph) -> list[int]:
    return [v for v in range(T.n) if T.degree(v) == 1]


def split_graph(m: int, n: int) -> Graph:
    """Clique on 0..m-1, independent set m..m+n-1, all cross edges."""
    _require(m >= 1 and n >= 1, "split graph needs m, n >= 1")
    edges = list(combinations(range(m), 2))
    edges += [(i, m + j) for i in range(m) for j in range(n)]
    return build_graph(m + n, edges)


def subdivision(G: Graph) -> Graph:
    """S(G): vertex n(G)+i subdivides the i-th edge of ``G.edges``."""
    edges = []
    for i, (u, v) in enumerate(G.edges):
        s = G.n + i
        edges += [(u, s), (s, v)]
    return build_graph(G.n + G.m, edges)


def hat_subdivision(G: Graph) -> Graph:
    """S(G) with all subdivision vertices made pairwise adjacent.

    The defining sentence speaks of "an edge between different vertices"; the
    drawing of the K_4 case shows every such edge, so the clique reading is used.
    """
    G.require_connected()
    _require(G.m >= 2, "hat subdivision needs at least two edges")
    S = subdivision(G)
    extra = combinations(range(G.n, G.n + G.m), 2)
    return build_graph(S.n, list(S.edges) + list(extra))


def h_graph(k: int, s: int, d: int) -> Graph:
    """H_{k,s,d}: join of K_k and K_s with every non-K_s edge subdivided d-1 times.

    Layout: K_k on 0..k-1, K_s on k..k+s-1, then for each K_k edge (i<j) the
    chain e^1..e^{d-1} starting next to i, then for each (u in K_k, v in K_s)
    the chain f^1..f^{d-1} starting next to u. Chain positions floor(d/2) and
    ceil(d/2) form the middle set, which is turned into a clique.
    """
    _require(k >= 1 and s >= 0 and d >= 2, "h_graph needs k >= 1, s >= 0, d >= 2")
    edges: list[tuple[int, int]] = list(combinations(range(k, k + s), 2))
    nxt = k + s
    middle: list[int] = []
    mid_pos = {d // 2, (d + 1) // 2}
    chains = list(combinations(range(k), 2)) + [(u, v) for u in range(k) for v in range(k, k + s)]
    for a, b in chains:
        prev = a
        for pos in range(1, d):
            edges.append((prev, nxt))
            if pos in mid_pos:
                middle.append(nxt)
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    # for odd d the two middle positions of a chain are already adjacent
    seen = set(edges)
    edges += [e for e in combinations(middle, 2) if e not in seen]
    return build_graph(nxt, edges)


def h_graph_middle(k: int, s: int, d: int) -> list[int]:
    """Indices of the middle-set vertices of :func:`h_graph` (k, s, d)."""
    mid_pos = sorted({d // 2, (d + 1) // 2})
    nchains = k * (k - 1) // 2 + k * s
    base = k + s
    return [base + c * (d - 1) + (p - 1) for c in range(nchains) for p in mid_pos]


def clique_tree(T: Graph, sizes: Sequence[int]) -> Graph:
    """K^T_{n_1..n_l}: leaf l_i (leaves in index order) becomes a clique of n_i vertices.

    Leaf l_i keeps its index as the first clique vertex; the other n_i - 1 clique
    vertices are appended in leaf order, so unit sizes return ``T`` itself.
    """
    _require(is_tree(T), "clique_tree needs a tree")
    L = leaves(T)
    _require(len(sizes) == len(L), f"expected {len(L)} sizes, got {len(sizes)}")
    _require(all(x >= 1 for x in sizes), "clique sizes must be positive")
    if T.n == 2:
        return complete(sizes[0] + sizes[1])
    edges = list(T.edges)
    nxt = T.n
    for leaf, size in zip(L, sizes):
        support = T.adj[leaf][0]
        members = [leaf] + list(range(nxt, nxt + size - 1))
        nxt += size - 1
        edges += combinations(members, 2)
        edges += [(support, x) for x in members[1:]]
    return build_graph(nxt, edges)


def counterexample_graph(k: int, n: int) -> Graph:
    """G_{k,n}: K_k with each edge replaced by n internally disjoint 2-paths, plus a universal vertex.

    x_1..x_k are 0..k-1; for pair (i<j) in lexicographic order the n midpoints
    follow; the universal vertex is last.
    """
    _require(k >= 2 and n >= 1, "counterexample graph needs k >= 2, n >= 1")
    edges = []
    nxt = k
    for i, j in combinations(range(k), 2):
        for _ in range(n):
            edges += [(i, nxt), (nxt, j)]
            nxt += 1
    u = nxt
    edges += [(x, u) for x in range(u)]
    return build_graph(u + 1, edges)


def counterexample_midpoint(k: int, n: int, i: int, j: int, copy: int) -> int:
    """Index of the ``copy``-th (0-based) common neighbour of x_i and x_j in G_{k,n}."""
    i, j = min(i, j), max(i, j)
    rank = next(r for r, p in enumerate(combinations(range(k), 2)) if p == (i, j))
    return k + rank * n + copy


def counterexample_highdiam(k: int, n: int, p: int) -> Graph:
    """Higher-diameter variant: 2p-paths in place of 2-paths, plus a subdivided star hub.

    Layout: originals 0..k-1; for each pair (i<j) n chains of 2p-1 internal
    vertices; then the star centre; then for each original i the p-1 leg
    vertices from the centre outward, the last of which is joined to i.
    """
    _require(k >= 2 and n >= 1 and p >= 2, "needs k >= 2, n >= 1, p >= 2")
    edges = []
    middles = []
    nxt = k
    for i, j in combinations(range(k), 2):
        for _ in range(n):
            prev = i
            for pos in range(1, 2 * p):
                edges.append((prev, nxt))
                if pos == p:
                    middles.append(nxt)
                prev = nxt
                nxt += 1
            edges.append((prev, j))
    centre = nxt
    nxt += 1
    for i in range(k):
        prev = centre
        for _ in range(p - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, i))
    edges += [(centre, m) for m in middles]
    return build_graph(nxt, edges)


@dataclass(frozen=True)
class ProductVertexMap:
    """Product vertex ``g * n_h + h`` corresponds to the factor pair ``(g, h)``."""

    n_g: int
    n_h: int

    def index(self, g: int, h: int) -> int:
        return g * self.n_h + h

    def pair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.n_h)

    def coord(self, x: int, factor: str) -> int:
        g, h = divmod(x, self.n_h)
        return g if _factor(factor) == "G" else h

    def layer(self, factor: str, fixed: int) -> list[int]:
        """The ``factor``-layer through the other coordinate ``fixed``."""
        if _factor(factor) == "G":
            return [self.index(g, fixed) for g in range(self.n_g)]
        return [self.index(fixed, h) for h in range(self.n_h)]


def _factor(factor) -> str:
    f = {"G": "G", "H": "H", 0: "G", 1: "H", "g": "G", "h": "H"}.get(factor)
    if f is None:
        raise ValueError(f"factor must be 'G' or 'H', got {factor!r}")
    return f


def cartesian_product(G: Graph, H: Graph) -> tuple[Graph, ProductVertexMap]:
    vmap = ProductVertexMap(G.n, H.n)
    edges = [(vmap.index(g, a), vmap.index(g, b)) for g in range(G.n) for a, b in H.edges]
    edges += [(vmap.index(a, h), vmap.index(b, h)) for h in range(H.n) for a, b in G.edges]
    return build_graph(G.n * H.n, edges), vmap


def project(
    vmap: ProductVertexMap, obj: Union[Iterable[int], tuple], factor="G"
) -> Union[frozenset[int], tuple[int, ...]]:
    """Project a vertex set (any non-tuple iterable) or a path (tuple/list) to a factor.

    Paths drop consecutive repeats, so a geodesic maps to a geodesic.
    """
    if isinstance(obj, (tuple, list)):
        out: list[int] = []
        for x in obj:
            c = vmap.coord(x, factor)
            if not out or out[-1] != c:
                out.append(c)
        return tuple(out)
    return frozenset(vmap.coord(x, factor) for x in obj)
