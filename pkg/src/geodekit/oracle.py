"""Brute-force reference values for tiny graphs.

Deliberately naive and independent of :mod:`geodekit.solvers`: geodesics are
found by exhaustive walks, and a set is tested by trying the full cross
product of per-pair geodesic choices. Only usable for a handful of vertices.
"""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph


def _all_distances(G: Graph) -> list[list[int]]:
    INF = G.n + 1
    d = [[0 if i == j else (1 if G.has_edge(i, j) else INF) for j in range(G.n)] for i in range(G.n)]
    for k in range(G.n):
        for i in range(G.n):
            for j in range(G.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def _walks(G: Graph, u: int, v: int, length: int) -> list[frozenset[int]]:
    """Vertex sets of all simple u,v-walks with exactly ``length`` edges."""
    out = set()

    def rec(x, seq):
        if len(seq) - 1 == length:
            if x == v:
                out.add(frozenset(seq))
            return
        for w in G.adj[x]:
            if w not in seq:
                rec(w, seq + [w])

    rec(u, [u])
    return sorted(out, key=sorted)


class NaiveOracle:
    def __init__(self, G: Graph):
        self.G = G
        self.d = _all_distances(G)
        self._geo = {}

    def geodesic_sets(self, u, v):
        key = (min(u, v), max(u, v))
        if key not in self._geo:
            self._geo[key] = _walks(self.G, key[0], key[1], self.d[key[0]][key[1]])
        return self._geo[key]

    def covers(self, pairs) -> bool:
        V = set(range(self.G.n))
        choices = [self.geodesic_sets(u, v) for u, v in pairs]
        return any(set().union(*pick) == V for pick in product(*choices))

    def is_strong_geodetic(self, S) -> bool:
        S = sorted(S)
        if self.G.n == 1:
            return S == [0]
        if len(S) < 2:
            return False
        return self.covers(list(combinations(S, 2)))

    def is_core(self, S, X) -> bool:
        if self.G.n == 1:
            return True
        pairs = {(min(x, s), max(x, s)) for x in X for s in S if x != s}
        return bool(pairs) and self.covers(sorted(pairs))

    def sg(self) -> int:
        for k in range(1, self.G.n + 1):
            if any(self.is_strong_geodetic(S) for S in combinations(range(self.G.n), k)):
                return k
        raise AssertionError

    def sg_sets(self) -> list[tuple[int, ...]]:
        k = self.sg()
        return [S for S in combinations(range(self.G.n), k) if self.is_strong_geodetic(S)]

    def sgc(self) -> int:
        if self.G.n == 1:
            return 1
        sets = self.sg_sets()
        for x in range(1, self.G.n + 1):
            for S in sets:
                if any(self.is_core(S, X) for X in combinations(S, x)):
                    return x
        raise AssertionError

    def g(self) -> int:
        if self.G.n == 1:
            return 1
        n = self.G.n
        for k in range(2, n + 1):
            for S in combinations(range(n), k):
                hit = set()
                for u, v in combinations(S, 2):
                    hit |= {w for w in range(n) if self.d[u][w] + self.d[w][v] == self.d[u][v]}
                if len(hit) == n:
                    return k
        raise AssertionError


def naive_sg(G: Graph) -> int:
    return NaiveOracle(G).sg()


def naive_sgc(G: Graph) -> int:
    return NaiveOracle(G).sgc()


def naive_g(G: Graph) -> int:
    return NaiveOracle(G).g()
