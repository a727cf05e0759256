"""All-pairs hop distances, intervals and geodesic enumeration."""

from __future__ import annotations

from collections import deque
from typing import Optional, Union

import numpy as np

from .graph import Graph, from_mask, to_mask
from .limits import DEFAULT_LIMITS, Outcome, SearchLimits

Path = tuple[int, ...]


def bfs_distances(G: Graph, source: int) -> list[int]:
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in G.adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


class DistanceOracle:
    """Distances of a connected graph plus the shortest-path DAG toward every target.

    ``dist`` is an ``n x n`` integer array. For a target ``v``, the downhill
    neighbours of ``u`` are the ``w`` adjacent to ``u`` with
    ``dist[w, v] == dist[u, v] - 1``; every geodesic is a walk down this DAG.
    """

    def __init__(self, G: Graph):
        G.require_connected()
        self.graph = G
        self._d = [bfs_distances(G, s) for s in range(G.n)]
        self.dist = np.array(self._d, dtype=np.int64).reshape(G.n, G.n)
        self.diameter = int(self.dist.max()) if G.n else 0
        self._interval: dict[tuple[int, int], int] = {}
        self._count: dict[tuple[int, int], int] = {}

    @property
    def n(self) -> int:
        return self.graph.n

    def d(self, u: int, v: int) -> int:
        return self._d[u][v]

    def dag(self, u: int, v: int) -> tuple[int, ...]:
        """Neighbours of ``u`` one step closer to ``v``."""
        if u == v:
            return ()
        target = self._d[u][v] - 1
        dv = self._d[v]
        return tuple(w for w in self.graph.adj[u] if dv[w] == target)

    def interval_mask(self, u: int, v: int) -> int:
        key = (u, v) if u <= v else (v, u)
        mask = self._interval.get(key)
        if mask is None:
            du, dv = self._d[u], self._d[v]
            total = du[v]
            mask = 0
            for w in range(self.n):
                if du[w] + dv[w] == total:
                    mask |= 1 << w
            self._interval[key] = mask
        return mask

    def interval(self, u: int, v: int) -> frozenset[int]:
        return from_mask(self.interval_mask(u, v))

    def count_geodesics(self, u: int, v: int) -> int:
        """Number of distinct shortest u,v-paths (exact, arbitrary precision)."""
        key = (u, v) if u <= v else (v, u)
        c = self._count.get(key)
        if c is None:
            a, b = key
            dv = self._d[b]
            ways = {b: 1}
            # process interval vertices by increasing distance to b
            order = sorted(
                (w for w in range(self.n) if self._d[a][w] + dv[w] == dv[a]),
                key=dv.__getitem__,
            )
            for w in order:
                if w == b:
                    continue
                ways[w] = sum(ways.get(x, 0) for x in self.dag(w, b))
            c = ways[a]
            self._count[key] = c
        return c

    def geodesics(
        self,
        u: int,
        v: int,
        through: Optional[int] = None,
        limits: SearchLimits = DEFAULT_LIMITS,
    ) -> Union[list[Path], Outcome]:
        """All u,v-geodesics in lexicographic order (optionally through one vertex).

        Exceeding ``limits.geodesic_cap`` returns an inconclusive
        :class:`Outcome` rather than a truncated list.
        """
        if through is not None:
            if self._d[u][through] + self._d[through][v] != self._d[u][v]:
                return []
            total = self.count_geodesics(u, through) * self.count_geodesics(through, v)
            if total > limits.geodesic_cap:
                return Outcome.inconclusive("geodesic_cap", lower=total, upper=total,
                                            count=total)
            head = self._walk(u, through)
            tail = self._walk(through, v)
            return [h + t[1:] for h in head for t in tail]
        total = self.count_geodesics(u, v)
        if total > limits.geodesic_cap:
            return Outcome.inconclusive("geodesic_cap", lower=total, upper=total,
                                        count=total)
        return self._walk(u, v)

    def _walk(self, u: int, v: int) -> list[Path]:
        out: list[Path] = []
        stack = [u]

        def rec(x: int) -> None:
            if x == v:
                out.append(tuple(stack))
                return
            for w in self.dag(x, v):
                stack.append(w)
                rec(w)
                stack.pop()

        rec(u)
        return out

    def is_convex(self, vertices) -> bool:
        S = sorted(vertices)
        mask = to_mask(S)
        for i, a in enumerate(S):
            for b in S[i + 1:]:
                if self.interval_mask(a, b) & ~mask:
                    return False
        return True


def distance_oracle(G: Graph) -> DistanceOracle:
    return DistanceOracle(G)


def interval(O: DistanceOracle, u: int, v: int) -> frozenset[int]:
    return O.interval(u, v)


def count_geodesics(O: DistanceOracle, u: int, v: int) -> int:
    return O.count_geodesics(u, v)


def enumerate_geodesics(
    O: DistanceOracle,
    u: int,
    v: int,
    through: Optional[int] = None,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> Union[list[Path], Outcome]:
    return O.geodesics(u, v, through=through, limits=limits)


def is_convex(O: DistanceOracle, vertices) -> bool:
    """True iff every geodesic between members stays inside the set."""
    return O.is_convex(vertices)
