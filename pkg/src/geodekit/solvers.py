"""Exact geodetic, strong geodetic and strong geodetic core computations.

Two searches do the work:

* a subset search that walks candidate sets in lexicographic order, size by
  size, with simplicial vertices pre-forced and cheap necessary conditions
  (interval coverage, geodesic capacity) applied incrementally;
* a cover search that decides whether a list of vertex pairs admits one
  geodesic per pair covering a target set. It branches on the uncovered vertex
  with the fewest covering options; an option fixes a pair for good. Pairs at
  distance at most two cover at most one interior vertex, so when no longer
  pair is involved the question is a bipartite matching and is solved as one.

Every positive answer carries a certificate accepted by
:mod:`geodekit.certificates`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from .certificates import CoreCertificate, SgCertificate
from .distance import DistanceOracle, Path
from .graph import Graph, GraphError, iter_mask, popcount, simplicial_mask, to_mask
from .limits import DEFAULT_LIMITS, Budget, LimitExceeded, Outcome, SearchLimits

_FAILED_MEMO_CAP = 2_000_000


@lru_cache(maxsize=64)
def oracle_for(G: Graph) -> DistanceOracle:
    return DistanceOracle(G)


def counting_lower_bound(n: int, diam: int) -> int:
    """Smallest k with k + C(k,2)(diam-1) >= n: each geodesic has at most diam-1 inner vertices."""
    if n <= 1:
        return n
    k = 2
    while k + comb(k, 2) * max(diam - 1, 0) < n:
        k += 1
    return k


class _Engine:
    def __init__(self, G: Graph, limits: SearchLimits):
        G.require_connected()
        self.G = G
        self.O = oracle_for(G)
        self.d = self.O._d
        self.limits = limits
        self.budget = Budget(limits)
        self._opts: dict[tuple[int, int], list[tuple[int, Path]]] = {}

    # geodesic options per pair, deduplicated by vertex set, canonical order kept
    def options(self, u: int, v: int) -> list[tuple[int, Path]]:
        key = (u, v) if u < v else (v, u)
        got = self._opts.get(key)
        if got is None:
            paths = self.O.geodesics(key[0], key[1], limits=self.limits)
            if isinstance(paths, Outcome):
                raise LimitExceeded("geodesic_cap")
            seen: dict[int, Path] = {}
            for p in paths:
                m = to_mask(p)
                if m not in seen:
                    seen[m] = p
            got = list(seen.items())
            self._opts[key] = got
        return got

    # ---- cover search -------------------------------------------------

    def cover(self, pairs: Sequence[tuple[int, int]], target: int) -> Optional[dict]:
        """One geodesic per pair whose union contains ``target``, or None."""
        union = 0
        for u, v in pairs:
            union |= self.O.interval_mask(u, v)
        if target & ~union:
            return None
        if all(self.d[u][v] <= 2 for u, v in pairs):
            choice = self._cover_matching(pairs, target)
        else:
            choice = self._cover_dfs(pairs, target)
        if choice is None:
            return None
        out = {}
        for i, (u, v) in enumerate(pairs):
            key = (u, v) if u < v else (v, u)
            p = choice.get(i)
            if p is None:
                p = self.options(u, v)[0][1]
            if p[0] != key[0]:
                p = p[::-1]
            out[key] = p
        return out

    def _cover_matching(self, pairs, target) -> Optional[dict]:
        # each distance-2 pair can cover one common neighbour of its ends
        todo = list(iter_mask(target))
        cand: list[list[int]] = []
        for w in todo:
            row = []
            for i, (u, v) in enumerate(pairs):
                if self.d[u][v] == 2 and self.d[u][w] == 1 and self.d[w][v] == 1:
                    row.append(i)
            if not row:
                return None
            cand.append(row)
        if len(todo) > sum(1 for u, v in pairs if self.d[u][v] == 2):
            return None
        owner: dict[int, int] = {}

        def augment(j: int, seen: set) -> bool:
            for i in cand[j]:
                if i in seen:
                    continue
                seen.add(i)
                if i not in owner or augment(owner[i], seen):
                    owner[i] = j
                    return True
            return False

        order = sorted(range(len(todo)), key=lambda j: (len(cand[j]), todo[j]))
        for j in order:
            self.budget.tick()
            if not augment(j, set()):
                return None
        return {i: (pairs[i][0], todo[j], pairs[i][1]) for i, j in owner.items()}

    def _cover_dfs(self, pairs, target) -> Optional[dict]:
        opts = [self.options(u, v) for u, v in pairs]
        failed: set[tuple[int, int]] = set()
        chosen: dict[int, Path] = {}
        n = self.G.n
        tick = self.budget.tick

        def rec(U: int, free: int) -> bool:
            if not U:
                return True
            key = (U, free)
            if key in failed:
                return False
            tick()
            need = popcount(U)
            cands = []
            reach = 0
            capacity = 0
            for i in iter_mask(free):
                seen: dict[int, Path] = {}
                for m, p in opts[i]:
                    r = m & U
                    if r and r not in seen:
                        seen[r] = p
                if not seen:
                    continue
                keep: list[int] = []
                for r in sorted(seen, key=popcount, reverse=True):
                    if not any(r & k == r for k in keep):
                        keep.append(r)
                capacity += popcount(keep[0])
                for r in keep:
                    cands.append((i, r, seen[r]))
                    reach |= r
            if U & ~reach or capacity < need:
                if len(failed) < _FAILED_MEMO_CAP:
                    failed.add(key)
                return False
            counts = [0] * n
            for _, r, _ in cands:
                for w in iter_mask(r):
                    counts[w] += 1
            w = min(iter_mask(U), key=counts.__getitem__)
            bit = 1 << w
            branch = [c for c in cands if c[1] & bit]
            branch.sort(key=lambda c: -popcount(c[1]))
            for i, r, p in branch:
                chosen[i] = p
                if rec(U & ~r, free & ~(1 << i)):
                    return True
                del chosen[i]
            if len(failed) < _FAILED_MEMO_CAP:
                failed.add(key)
            return False

        if rec(target, (1 << len(pairs)) - 1):
            return dict(chosen)
        return None

    # ---- certificates -------------------------------------------------

    def strong_certificate(self, S: Sequence[int]) -> Optional[SgCertificate]:
        S = tuple(sorted(S))
        if self.G.n == 1:
            return SgCertificate(S, {}) if S == (0,) else None
        if len(S) < 2:
            return None
        target = self.G.full_mask & ~to_mask(S)
        paths = self.cover(list(combinations(S, 2)), target)
        return None if paths is None else SgCertificate(S, paths)

    def core_certificate(self, S: Sequence[int], X: Sequence[int]) -> Optional[CoreCertificate]:
        S = tuple(sorted(S))
        X = tuple(sorted(X))
        if self.G.n == 1:
            return CoreCertificate(S, X, {}) if S == X == (0,) else None
        if not X:
            return None
        pairs = sorted({(min(x, s), max(x, s)) for x in X for s in S if x != s})
        need = popcount(self.G.full_mask & ~to_mask(S))
        if sum(self.d[u][v] - 1 for u, v in pairs) < need:
            return None
        paths = self.cover(pairs, self.G.full_mask & ~to_mask(S))
        return None if paths is None else CoreCertificate(S, X, paths)

    # ---- subset search ------------------------------------------------

    def candidates(self, k: int, forced: int, capacity_check: bool) -> Iterator[tuple[int, ...]]:
        """Size-k supersets of ``forced`` in lexicographic order that pass the cheap filters.

        Filters: the pairwise intervals cover V; with ``capacity_check``, the
        pairs can host enough inner vertices, sum(d(u,v)-1) >= n-k.
        """
        n = self.G.n
        full = self.G.full_mask
        d = self.d
        I = self.O.interval_mask
        base = sorted(iter_mask(forced))
        free = [v for v in range(n) if not forced >> v & 1]
        r = k - len(base)
        if r < 0 or r > len(free):
            return
        need = n - k
        diam1 = max(self.O.diameter - 1, 0)
        union0 = 0
        cap0 = 0
        for a, b in combinations(base, 2):
            union0 |= I(a, b)
            cap0 += d[a][b] - 1
        if k == 1:
            union0 = full if n == 1 else 0
        tick = self.budget.tick
        chosen = list(base)

        def rec(start: int, left: int, union: int, cap: int):
            if left == 0:
                tick()
                if union == full and (not capacity_check or cap >= need):
                    yield tuple(sorted(chosen))
                return
            if capacity_check:
                j = len(chosen)
                if cap + (comb(k, 2) - comb(j, 2)) * diam1 < need:
                    return
            for idx in range(start, len(free) - left + 1):
                v = free[idx]
                u2 = union | (1 << v)
                c2 = cap
                for a in chosen:
                    u2 |= I(a, v)
                    c2 += d[a][v] - 1
                chosen.append(v)
                yield from rec(idx + 1, left - 1, u2, c2)
                chosen.pop()

        start_union = union0 | forced
        yield from rec(0, r, start_union, cap0)

    def strong_lower_bound(self) -> tuple[int, int]:
        n = self.G.n
        forced = simplicial_mask(self.G)
        if n == 1:
            return 1, forced
        lo = max(2, popcount(forced), counting_lower_bound(n, self.O.diameter))
        return lo, forced


def _engine(G: Graph, limits: SearchLimits) -> _Engine:
    return _Engine(G, limits)


def _as_tuple(S: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(S)))


# ---- geodetic sets ------------------------------------------------------

def is_geodetic_set(G: Graph, S: Iterable[int]) -> bool:
    """True iff the intervals between pairs of ``S`` cover every vertex."""
    S = _as_tuple(S)
    if not S:
        return False
    if len(S) == 1:
        return G.n == 1
    O = oracle_for(G)
    union = 0
    for a, b in combinations(S, 2):
        union |= O.interval_mask(a, b)
    return union == G.full_mask


def geodetic_number(G: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> Outcome:
    """g(G) with the lexicographically least minimum geodetic set as ``extra['set']``.

    Simplicial vertices are never inner vertices of a geodesic, so they are forced.
    """
    E = _engine(G, limits)
    n = G.n
    if n == 1:
        return Outcome.ok(1, set=(0,))
    forced = simplicial_mask(G)
    k = max(2, popcount(forced))
    try:
        for k in range(k, n + 1):
            for S in E.candidates(k, forced, capacity_check=False):
                return Outcome.ok(k, set=S)
    except LimitExceeded as exc:
        return Outcome.inconclusive(exc.limit, lower=k, upper=n)
    raise AssertionError("V(G) is always a geodetic set")


# ---- strong geodetic sets ----------------------------------------------

def is_strong_geodetic_set(
    G: Graph, S: Iterable[int], limits: SearchLimits = DEFAULT_LIMITS
) -> Outcome:
    """Decide whether ``S`` admits covering geodesics; the certificate comes with a yes."""
    S = _as_tuple(S)
    if not S or any(not 0 <= v < G.n for v in S):
        raise GraphError("set must be a nonempty subset of V(G)", kind="range")
    E = _engine(G, limits)
    try:
        cert = E.strong_certificate(S)
    except LimitExceeded as exc:
        return Outcome.inconclusive(exc.limit)
    return Outcome.ok(cert is not None, certificate=cert)


def strong_geodetic_number(
    G: Graph, limits: SearchLimits = DEFAULT_LIMITS, use_geodetic_bound: bool = False
) -> Outcome:
    """Exact sg(G); the certificate holds the lexicographically least sg-set."""
    E = _engine(G, limits)
    n = G.n
    lo, forced = E.strong_lower_bound()
    if n == 1:
        return Outcome.ok(1, certificate=SgCertificate((0,), {}))
    if use_geodetic_bound:
        g = geodetic_number(G, limits)
        if g.proved:
            lo = max(lo, g.value)
    k = lo
    try:
        for k in range(lo, n + 1):
            for S in E.candidates(k, forced, capacity_check=True):
                cert = E.strong_certificate(S)
                if cert is not None:
                    return Outcome.ok(k, certificate=cert, nodes=E.budget.nodes)
    except LimitExceeded as exc:
        return Outcome.inconclusive(exc.limit, lower=k, upper=n)
    raise AssertionError("V(G) is always a strong geodetic set")


def enumerate_min_sg_sets(G: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> Outcome:
    """All minimum strong geodetic sets in lexicographic order (``value`` is the list).

    ``extra['certificates']`` holds one certificate per set. An inconclusive
    result carries the sets found so far in ``extra['partial']``.
    """
    E = _engine(G, limits)
    n = G.n
    lo, forced = E.strong_lower_bound()
    if n == 1:
        return Outcome.ok([frozenset({0})], sg=1, certificates=[SgCertificate((0,), {})])
    found: list[SgCertificate] = []
    k = lo
    try:
        for k in range(lo, n + 1):
            for S in E.candidates(k, forced, capacity_check=True):
                cert = E.strong_certificate(S)
                if cert is not None:
                    found.append(cert)
            if found:
                return Outcome.ok([frozenset(c.set) for c in found], sg=k, certificates=found)
    except LimitExceeded as exc:
        return Outcome.inconclusive(
            exc.limit, lower=k, upper=n, partial=[frozenset(c.set) for c in found], complete=False
        )
    raise AssertionError("V(G) is always a strong geodetic set")


# ---- strong geodetic cores ---------------------------------------------

def _core_search(E: _Engine, sets: Sequence[tuple[int, ...]], start: int = 1):
    """Smallest core over all given sets; ties go to the earliest set, then least core."""
    top = max(len(S) for S in sets)
    for x in range(start, top + 1):
        for S in sets:
            if x > len(S):
                continue
            for X in combinations(S, x):
                E.budget.tick()
                cert = E.core_certificate(S, X)
                if cert is not None:
                    return x, cert
    return None


def sgc_of_set(G: Graph, S: Iterable[int], limits: SearchLimits = DEFAULT_LIMITS) -> Outcome:
    """Size of a smallest strong geodetic core of ``S`` (ascending search over core size)."""
    S = _as_tuple(S)
    E = _engine(G, limits)
    if G.n == 1:
        return Outcome.ok(1, certificate=CoreCertificate((0,), (0,), {}))
    try:
        if E.strong_certificate(S) is None:
            raise GraphError(f"{list(S)} is not a strong geodetic set", kind="not-strong-geodetic")
        found = _core_search(E, [S])
    except LimitExceeded as exc:
        return Outcome.inconclusive(exc.limit, lower=1, upper=max(1, len(S) - 1))
    x, cert = found
    return Outcome.ok(x, certificate=cert)


def strong_geodetic_core_number(G: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> Outcome:
    """sgc(G): minimum of sgc(S) over all sg-sets S; ``extra['sg']`` records sg(G)."""
    if G.n == 1:
        return Outcome.ok(1, certificate=CoreCertificate((0,), (0,), {}), sg=1)
    sets = enumerate_min_sg_sets(G, limits)
    if not sets.proved:
        return Outcome.inconclusive(sets.limit_hit, lower=1, upper=None, stage="sg-sets")
    E = _engine(G, limits)
    sg = sets.extra["sg"]
    try:
        x, cert = _core_search(E, [tuple(sorted(S)) for S in sets.value])
    except LimitExceeded as exc:
        return Outcome.inconclusive(exc.limit, lower=1, upper=max(1, sg - 1), sg=sg, stage="core")
    return Outcome.ok(x, certificate=cert, sg=sg, sg_sets=len(sets.value))


# ---- structural predicates ---------------------------------------------

def is_geodetic_graph(G: Graph) -> bool:
    O = oracle_for(G)
    return all(O.count_geodesics(u, v) == 1 for u, v in combinations(range(G.n), 2))


def is_generalized_geodetic(G: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> Outcome:
    """g(G) == sg(G)? Geodetic graphs answer yes without search."""
    if is_geodetic_graph(G):
        return Outcome.ok(True, reason="geodetic")
    g = geodetic_number(G, limits)
    if not g.proved:
        return Outcome.inconclusive(g.limit_hit, stage="g")
    sg = strong_geodetic_number(G, limits)
    if not sg.proved:
        return Outcome.inconclusive(sg.limit_hit, stage="sg")
    return Outcome.ok(g.value == sg.value, g=g.value, sg=sg.value)


CONVEX_PARTITION_MAX_N = 20


def has_convex_2_partition(G: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A bipartition into two convex parts, or None if none exists.

    A simplicial vertex alone is always convex with a convex complement, which
    short-cuts the search; otherwise all bipartitions with vertex 0 on the
    first side are tried, cutting a branch once a part's interval closure
    reaches into the other part.
    """
    n = G.n
    if n < 2:
        raise GraphError("convex 2-partition needs at least two vertices", kind="parameter")
    if n > CONVEX_PARTITION_MAX_N:
        raise GraphError(f"convex 2-partition search limited to n <= {CONVEX_PARTITION_MAX_N}",
                         kind="range")
    O = oracle_for(G)
    simp = simplicial_mask(G)
    if simp:
        v = next(iter_mask(simp))
        return frozenset({v}), frozenset(range(n)) - {v}
    I = O.interval_mask

    def rec(v: int, A: list, B: list, hullA: int, hullB: int):
        if v == n:
            if B:
                return frozenset(A), frozenset(B)
            return None
        bit = 1 << v
        for side in (0, 1):
            own, other = (A, B) if side == 0 else (B, A)
            hull_own = hullA if side == 0 else hullB
            hull_other = hullB if side == 0 else hullA
            if hull_other & bit:
                continue
            h = hull_own | bit
            for a in own:
                h |= I(a, v)
            if h & to_mask(other):
                continue
            own.append(v)
            res = rec(v + 1, A, B, h, hullB) if side == 0 else rec(v + 1, A, B, hullA, h)
            own.pop()
            if res is not None:
                return res
        return None

    return rec(1, [0], [], 1, 0)
