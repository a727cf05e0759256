"""Immutable simple graphs on dense integer vertices.

Vertex sets travel through the solvers as Python ``int`` bitmasks (bit ``v``
set means vertex ``v`` is a member); the public API speaks ``frozenset``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph data. ``kind`` names the defect (loop, duplicate, range, ...)."""

    def __init__(self, message: str, kind: str = "invalid"):
        super().__init__(message)
        self.kind = kind


class DisconnectedGraphError(GraphError):
    def __init__(self, message: str = "graph is disconnected"):
        super().__init__(message, kind="disconnected")


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_mask(mask))


def iter_mask(mask: int):
    """Yield set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    connected: bool = field(repr=False)
    adj_mask: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError()

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, renumbered in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return build_graph(len(vertices), edges)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize an edge list.

    Loops, repeated pairs and out-of-range endpoints raise :class:`GraphError`.
    Disconnected input is accepted; ``Graph.connected`` records it and the
    distance and solver layers refuse it.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}", kind="range")
    seen: set[tuple[int, int]] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}", kind="range")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", kind="loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}", kind="duplicate")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    adj_mask = tuple(to_mask(a) for a in adj)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adj=adj,
        connected=_is_connected(n, adj),
        adj_mask=adj_mask,
    )


def _is_connected(n: int, adj: Sequence[Sequence[int]]) -> bool:
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def simplicial_vertices(G: Graph) -> frozenset[int]:
    """Vertices whose open neighbourhood is a clique."""
    return from_mask(simplicial_mask(G))


def simplicial_mask(G: Graph) -> int:
    mask = 0
    for v in range(G.n):
        nbm = G.adj_mask[v]
        if all((G.adj_mask[a] | (1 << a)) & nbm == nbm for a in G.adj[v]):
            mask |= 1 << v
    return mask
