"""Witness objects for strong geodetic sets and cores, and an independent checker.

The checker recomputes distances with its own BFS from the adjacency lists, so
it shares no code with the distance oracle or the solvers it audits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .graph import Graph


class CertificateError(ValueError):
    pass


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SgCertificate:
    """A vertex set with one fixed geodesic per unordered pair, covering the graph."""

    set: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "set": list(self.set),
            "paths": [{"pair": list(k), "path": list(self.paths[k])} for k in sorted(self.paths)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> SgCertificate:
        return cls(tuple(d["set"]), {_key(*p["pair"]): tuple(p["path"]) for p in d["paths"]})


@dataclass(frozen=True)
class CoreCertificate:
    """A strong geodetic set, a core inside it, and geodesics for pairs meeting the core."""

    set: tuple[int, ...]
    core: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "set": list(self.set),
            "core": list(self.core),
            "paths": [{"pair": list(k), "path": list(self.paths[k])} for k in sorted(self.paths)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> CoreCertificate:
        return cls(
            tuple(d["set"]),
            tuple(d["core"]),
            {_key(*p["pair"]): tuple(p["path"]) for p in d["paths"]},
        )


def _bfs(G: Graph, s: int) -> list[int]:
    dist = [-1] * G.n
    dist[s] = 0
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in G.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _check_paths(G: Graph, expected_pairs: set, paths: Mapping) -> set[int]:
    if set(paths) != expected_pairs:
        missing = expected_pairs - set(paths)
        extra = set(paths) - expected_pairs
        raise CertificateError(f"pair set mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
    covered: set[int] = set()
    dist_cache: dict[int, list[int]] = {}
    for (u, v), p in paths.items():
        if len(p) < 2 or {p[0], p[-1]} != {u, v}:
            raise CertificateError(f"path {p} does not join {u} and {v}")
        if len(set(p)) != len(p):
            raise CertificateError(f"path {p} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if b not in G.adj[a]:
                raise CertificateError(f"path {p} uses non-edge ({a}, {b})")
        if u not in dist_cache:
            dist_cache[u] = _bfs(G, u)
        if len(p) - 1 != dist_cache[u][v]:
            raise CertificateError(f"path {p} is not a shortest {u},{v}-path")
        covered.update(p)
    return covered


def check_sg_certificate(G: Graph, cert: SgCertificate) -> None:
    """Raise :class:`CertificateError` unless ``cert`` witnesses a strong geodetic set."""
    S = sorted(set(cert.set))
    if len(S) != len(cert.set) or any(not 0 <= v < G.n for v in S):
        raise CertificateError("set has repeated or out-of-range vertices")
    if G.n == 1:
        if S != [0] or cert.paths:
            raise CertificateError("single-vertex graph takes its vertex as the set")
        return
    covered = _check_paths(G, set(combinations(S, 2)), cert.paths)
    if len(covered) != G.n:
        raise CertificateError(f"uncovered vertices {sorted(set(range(G.n)) - covered)}")


def check_core_certificate(G: Graph, cert: CoreCertificate) -> None:
    """Raise :class:`CertificateError` unless ``cert.core`` is a strong geodetic core of ``cert.set``."""
    S = set(cert.set)
    X = set(cert.core)
    if not X <= S:
        raise CertificateError("core is not a subset of the set")
    if G.n == 1:
        if S != {0} or X != {0}:
            raise CertificateError("single-vertex graph takes its vertex as set and core")
        return
    if not X:
        raise CertificateError("empty core")
    pairs = {_key(x, s) for x in X for s in S if x != s}
    covered = _check_paths(G, pairs, cert.paths)
    if len(covered) != G.n:
        raise CertificateError(f"uncovered vertices {sorted(set(range(G.n)) - covered)}")


def verify(G: Graph, cert) -> bool:
    try:
        if isinstance(cert, CoreCertificate):
            check_core_certificate(G, cert)
        else:
            check_sg_certificate(G, cert)
    except CertificateError:
        return False
    return True
