"""Registry of checkable statements about strong geodetic numbers and cores.

Each claim names the graphs it builds, the relation it expects, where the
expected value comes from (a closed formula or an exhaustive computation), and
a budget class: ``fast`` (seconds), ``standard`` (minutes), ``long`` (tens of
minutes). A failing claim is reported as such; nothing is suppressed.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional

import networkx as nx

from . import bounds as B
from . import families as F
from .certificates import check_core_certificate, check_sg_certificate
from .distance import DistanceOracle
from .graph import Graph, build_graph
from .limits import DEFAULT_LIMITS, Outcome, SearchLimits
from .oracle import NaiveOracle
from .solvers import (
    enumerate_min_sg_sets,
    geodetic_number,
    has_convex_2_partition,
    is_generalized_geodetic,
    is_geodetic_set,
    is_strong_geodetic_set,
    sgc_of_set,
    strong_geodetic_core_number,
    strong_geodetic_number,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
BUDGET_CLASSES = ("fast", "standard", "long")


@dataclass
class ClaimRecord:
    claim_id: str
    location: str
    quote: str
    graphs: list[str]
    relation: str
    budget_class: str
    provenance: str
    result: Optional[str] = None
    measured: dict = field(default_factory=dict)
    detail: str = ""
    seconds: Optional[float] = None

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("seconds")
        return d


class _Undecided(Exception):
    pass


def _need(out: Outcome) -> Outcome:
    if not out.proved:
        raise _Undecided(f"{out.limit_hit} hit (bracket [{out.lower}, {out.upper}])")
    return out


@dataclass(frozen=True)
class Claim:
    claim_id: str
    location: str
    quote: str
    graphs: tuple[str, ...]
    relation: str
    budget_class: str
    provenance: str
    check: Callable[[SearchLimits, int], tuple[bool, dict, str]]

    def record(self) -> ClaimRecord:
        return ClaimRecord(self.claim_id, self.location, self.quote, list(self.graphs),
                           self.relation, self.budget_class, self.provenance)


REGISTRY: dict[str, Claim] = {}


def claim(claim_id, location, quote, graphs, relation, budget_class, provenance):
    def deco(fn):
        REGISTRY[claim_id] = Claim(claim_id, location, quote, tuple(graphs), relation,
                                   budget_class, provenance, fn)
        return fn
    return deco


def connected_graphs(max_n: int, min_n: int = 1):
    """All connected graphs with min_n <= n <= max_n up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas covers orders up to 7")
    for A in nx.graph_atlas_g():
        k = A.number_of_nodes()
        if min_n <= k <= max_n and k > 0 and nx.is_connected(A):
            yield build_graph(k, A.edges())


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return F.path(n)
    T = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return F.tree_from_edges(n, T.edges())


# ---------------------------------------------------------------------------


@claim("C-HAT-K4", "Prop. on hat-subdivision; sharpness (i)", "sg(Ŝ(G)) = n(G)",
       ["hat(K4)"], "sg = 4, sgc = 3, unique sg-set = originals", "fast", "closed formula")
def _hat_k4(limits, seed):
    G = F.hat_subdivision(F.complete(4))
    sets = _need(enumerate_min_sg_sets(G, limits))
    core = _need(strong_geodetic_core_number(G, limits))
    m = {"sg": sets.extra["sg"], "sg_sets": [sorted(s) for s in sets.value], "sgc": core.value}
    ok = m["sg"] == 4 and m["sg_sets"] == [[0, 1, 2, 3]] and m["sgc"] == 3
    return ok, m, ""


@claim("C-711", "7/11 example", "sgc(S) = 2 ... sgc(T) = 4", ["K_{7,11}"],
       "sg = 7 with unique sg-set the 7-side; sgc(S)=2; sgc(T)=4", "fast", "worked example")
def _seven_eleven(limits, seed):
    G = F.complete_bipartite(7, 11)
    S = tuple(range(7))
    T = (0, 1, 2, 3, 4, 7, 8, 9)
    sets = _need(enumerate_min_sg_sets(G, limits))
    cs = _need(sgc_of_set(G, S, limits))
    ct = _need(sgc_of_set(G, T, limits))
    m = {"sg": sets.extra["sg"], "sg_sets": [sorted(s) for s in sets.value],
         "sgc_S": cs.value, "sgc_T": ct.value, "core_T": list(ct.certificate.core)}
    ok = m["sg"] == 7 and m["sg_sets"] == [list(S)] and cs.value == 2 and ct.value == 4
    return ok, m, ""


@claim("C-COCKTAIL", "sharpness (ii)", "sg(G) = n - floor(n/3)", ["cocktail(6..9)"],
       "sg = n - floor(n/3), sgc = floor(n/3)", "fast", "closed formula")
def _cocktail(limits, seed):
    m = {}
    ok = True
    for n in (6, 7, 8, 9):
        out = _need(strong_geodetic_core_number(F.cocktail_party(n), limits))
        m[n] = {"sg": out.extra["sg"], "sgc": out.value}
        ok &= out.extra["sg"] == n - n // 3 and out.value == n // 3
    return ok, m, ""


@claim("C-KN-BIP", "complete bipartite special case", "sg(K_{n,C(n,2)}) = n",
       ["K_{3,3}", "K_{4,6}"], "sg = n", "fast", "closed formula")
def _kn_bip(limits, seed):
    m = {n: _need(strong_geodetic_number(F.complete_bipartite(n, comb(n, 2)), limits)).value
         for n in (3, 4)}
    return all(m[n] == n for n in m), m, ""


@claim("C-H324", "sharpness (iii)", "sgc(H_{k,s,d}) = k", ["H(3,2,4)"],
       "n = 32, diam = 4, sg = 5, sgc = 3, capacity inequality tight", "standard", "closed formula")
def _h324(limits, seed):
    G = F.h_graph(3, 2, 4)
    diam = DistanceOracle(G).diameter
    out = _need(strong_geodetic_core_number(G, limits))
    sg, sgc = out.extra["sg"], out.value
    lhs = (sgc * (sg - sgc) + comb(sgc, 2)) * (diam - 1)
    m = {"n": G.n, "diam": diam, "sg": sg, "sgc": sgc, "capacity_lhs": lhs, "n_minus_sg": G.n - sg,
         "sgc_bounds": list(B.sgc_bounds(G.n, sg, diam))}
    ok = G.n == 32 and diam == 4 and sg == 5 and sgc == 3 and lhs == G.n - sg
    return ok, m, ""


@claim("C-SMALL", "general bounds theorem", "≤ sgc(G) ≤ min{s − 1, n − s}",
       ["all connected graphs, n <= 6"], "bounds hold; solver = naive oracle", "standard",
       "exhaustive computation")
def _small(limits, seed):
    count = 0
    bad = []
    for G in connected_graphs(6):
        count += 1
        g = _need(geodetic_number(G, limits)).value
        core = _need(strong_geodetic_core_number(G, limits))
        sg, sgc = core.extra["sg"], core.value
        naive = NaiveOracle(G)
        if (sg, sgc, g) != (naive.sg(), naive.sgc(), naive.g()):
            bad.append((G.edges, "oracle mismatch"))
        if g > sg:
            bad.append((G.edges, "g > sg"))
        d = DistanceOracle(G).diameter if G.n > 1 else 0
        if G.n > 1 and not G.is_complete():
            if sg >= G.n:
                bad.append((G.edges, "sg >= n"))
            lo, hi = B.sgc_bounds(G.n, sg, d)
            if not lo <= sgc <= hi or not B.eq1_holds(sgc, sg, d, G.n):
                bad.append((G.edges, "sgc bound"))
    return not bad, {"graphs": count, "violations": [str(b) for b in bad[:5]]}, ""


@claim("C-TREES", "trees lemma", "If T is a tree, then sgc(T) = 1", ["200 random trees, n <= 12"],
       "sgc = 1", "fast", "closed formula")
def _trees(limits, seed):
    rng = random.Random(seed)
    vals = []
    for _ in range(200):
        T = random_tree(rng.randint(1, 12), rng)
        vals.append(_need(strong_geodetic_core_number(T, limits)).value)
    return all(v == 1 for v in vals), {"trees": len(vals), "max_sgc": max(vals)}, ""


def _product_sg(G, H, limits):
    P, vm = F.cartesian_product(G, H)
    out = _need(strong_geodetic_number(P, limits))
    return P, vm, out


@claim("C-KNKN", "products section", "which is the exact value", ["product(K3,K3)", "product(K4,K4)"],
       "sg(K_n x K_n) = 2n - 1 = core-based bound", "standard", "closed formula (cited result)")
def _knkn(limits, seed):
    m = {}
    for n in (3, 4):
        K = F.complete(n)
        P, _, out = _product_sg(K, K, limits)
        check_sg_certificate(P, out.certificate)
        bound = B.product_upper_sgc(n, 1, n, n, 1, n)
        m[f"K{n}xK{n}"] = {"sg": out.value, "core_bound": bound, "set": list(out.certificate.set),
                           "certificate_checked": True}
    ok = all(v["sg"] == v["core_bound"] for v in m.values())
    detail = "" if ok else "a strong geodetic set smaller than 2n-1 exists (certificate re-checked)"
    return ok, m, detail


@claim("C-PNP3", "P_n x P_3 proposition", "sg(P_n □ P_3) = 4", ["product(P3..6,P3)"],
       "sg = 4", "fast", "closed formula")
def _pnp3(limits, seed):
    m = {n: _product_sg(F.path(n), F.path(3), limits)[2].value for n in (3, 4, 5, 6)}
    return all(v == 4 for v in m.values()), m, ""


@claim("C-K4K2", "clique-tree corollary (ii)", "sg(K_k □ G) = sg(K_k) = k", ["product(K4,K2)"],
       "sg = 4", "fast", "closed formula")
def _k4k2(limits, seed):
    v = _product_sg(F.complete(4), F.complete(2), limits)[2].value
    return v == 4, {"sg": v}, ""


@claim("C-CLIQUETREE", "clique-tree theorem", "n(G) ≤ s/2", ["product(cliquetree(P3,2,2),K2)"],
       "sg = s = 4", "fast", "closed formula")
def _cliquetree(limits, seed):
    K = F.clique_tree(F.path(3), [2, 2])
    s = _need(strong_geodetic_number(K, limits)).value
    v = _product_sg(K, F.complete(2), limits)[2].value
    return s == 4 and v == 4, {"sg_K": s, "sg_product": v}, ""


@claim("C-PROJECTION", "projection lemma", "p_G(S) is a geodetic set of G",
       ["products of C-KNKN, C-PNP3, C-K4K2, C-CLIQUETREE"],
       "G-projection of every proved sg-set is geodetic", "standard", "lemma")
def _projection(limits, seed):
    pairs = [(F.complete(3), F.complete(3)), (F.complete(4), F.complete(4)),
             (F.complete(4), F.complete(2)), (F.clique_tree(F.path(3), [2, 2]), F.complete(2))]
    pairs += [(F.path(n), F.path(3)) for n in (3, 4, 5, 6)]
    checked = 0
    ok = True
    for G, H in pairs:
        P, vm, out = _product_sg(G, H, limits)
        proj = F.project(vm, set(out.certificate.set), "G")
        ok &= is_geodetic_set(G, proj)
        checked += 1
    return ok, {"products": checked}, ""


@claim("C-CONVEX2", "convex 2-partition theorem", "sgc(G) > sg(G)/2", ["product(hat(K4),K2)"],
       "hat(K4) generalized geodetic, sgc = 3 > 2, K2 convex-2-partitionable, sg(product) >= 5",
       "standard", "theorem")
def _convex2(limits, seed):
    G = F.hat_subdivision(F.complete(4))
    gg = _need(is_generalized_geodetic(G, limits))
    core = _need(strong_geodetic_core_number(G, limits))
    part = has_convex_2_partition(F.complete(2))
    P, _, out = _product_sg(G, F.complete(2), limits)
    m = {"generalized_geodetic": gg.value, "g": gg.extra.get("g"), "sg": core.extra["sg"],
         "sgc": core.value, "K2_partition": part and [sorted(x) for x in part],
         "sg_product": out.value}
    ok = gg.value and 2 * core.value > core.extra["sg"] and part is not None and out.value >= 5
    return ok, m, ""


def counterexample_witness(k: int, n: int):
    """The size-(kn+1) set and its fixed geodesics in G_{k,n} x K_n, as a certificate."""
    from .certificates import SgCertificate
    from .solvers import oracle_for

    G = F.counterexample_graph(k, n)
    P, vm = F.cartesian_product(G, F.complete(n))
    u = G.n - 1
    S = [vm.index(u, 0)] + [vm.index(i, j) for i in range(k) for j in range(n)]
    mid = F.counterexample_midpoint
    paths = {}
    for i, i2 in combinations(range(k), 2):
        for j in range(n):
            for j2 in range(n):
                if j == j2:
                    p = (vm.index(i, j), vm.index(mid(k, n, i, i2, j), j), vm.index(i2, j))
                else:
                    p = (vm.index(i, j), vm.index(mid(k, n, i, i2, j2), j),
                         vm.index(i2, j), vm.index(i2, j2))
                key = (min(p[0], p[-1]), max(p[0], p[-1]))
                paths[key] = p if p[0] == key[0] else p[::-1]
    for j in range(1, n):
        p = (vm.index(u, 0), vm.index(u, j), vm.index(0, j))
        key = (min(p[0], p[-1]), max(p[0], p[-1]))
        paths[key] = p if p[0] == key[0] else p[::-1]
    O = oracle_for(P)
    for a, b in combinations(sorted(S), 2):
        if (a, b) not in paths:
            paths[(a, b)] = O.geodesics(a, b)[0]
    return P, SgCertificate(tuple(sorted(S)), paths)


@claim("C-COUNTEREXAMPLE", "counterexample theorem", "sg(G_{k,n} □ K_n) ≤ kn + 1",
       ["cex(4,2)", "product(cex(4,2),K2)"], "sg(G_{4,2}) = 10 > 9 >= sg(G_{4,2} x K2)", "long",
       "closed formula + explicit witness")
def _counterexample(limits, seed):
    G = F.counterexample_graph(4, 2)
    sg = _need(strong_geodetic_number(G, limits))
    P, cert = counterexample_witness(4, 2)
    check_sg_certificate(P, cert)
    direct = _need(is_strong_geodetic_set(P, cert.set, limits))
    closed = B.counterexample_closed_forms(4, 2)
    m = {"sg_G": sg.value, "closed_forms": list(closed), "witness_size": len(cert.set),
         "witness": list(cert.set), "witness_checked": True, "solver_agrees": direct.value}
    ok = sg.value == closed[0] == 10 and len(cert.set) == closed[1] == 9 and direct.value
    return ok, m, ""


@claim("C-HAT-STRICT", "non-equality proposition", "sgc(Ŝ(G_n)) = n", ["hat(K_{4,6})"],
       "hat_lower(10,24) = 3 < sgc = 4", "long", "closed formula")
def _hat_strict(limits, seed):
    G = F.hat_subdivision(F.complete_bipartite(4, 6))
    low = B.hat_lower(10, 24)
    out = _need(strong_geodetic_core_number(G, limits))
    check_core_certificate(G, out.certificate)
    m = {"hat_lower": low, "sgc": out.value, "sg": out.extra["sg"], "core": list(out.certificate.core)}
    return low == 3 and out.value == 4 and out.extra["sg"] == 10, m, ""


@claim("C-CONJ-SMALL", "prism conjecture (small orders)", "sg(G □ K_2) ≥ sg(G)",
       ["all connected graphs, 2 <= n <= 5"], "sg(G x K2) >= sg(G)", "standard",
       "exhaustive computation")
def _conj_small(limits, seed):
    bad = []
    count = 0
    for G in connected_graphs(5, min_n=2):
        count += 1
        a = _need(strong_geodetic_number(G, limits)).value
        P, _ = F.cartesian_product(G, F.complete(2))
        b = _need(strong_geodetic_number(P, limits)).value
        if b < a:
            bad.append(str(G.edges))
    return not bad, {"graphs": count, "violations": bad}, ""


@claim("C-FORMULAS", "closed forms", "sg(G_{k,n}) = \\binom{k}{2}(n−1) + k", ["(arithmetic)"],
       "closed-form values", "fast", "closed formula")
def _formulas(limits, seed):
    m = {
        "cex(4,2)": list(B.counterexample_closed_forms(4, 2)),
        "cex(5,2)": list(B.counterexample_closed_forms(5, 2)),
        "gap(4,2)": B.counterexample_gap(4, 2),
        "hat_lower(4,6)": B.hat_lower(4, 6),
        "hat_lower(10,24)": B.hat_lower(10, 24),
        "old(K4xK4)": B.product_upper_old(4, 4, 4, 4),
        "sgc_bound(K4xK4)": B.product_upper_sgc(4, 1, 4, 4, 1, 4),
        "H(3,2,4) n": F.h_graph(3, 2, 4).n,
    }
    ok = (m["cex(4,2)"] == [10, 9] and m["cex(5,2)"] == [15, 11] and m["gap(4,2)"] == 1
          and m["hat_lower(4,6)"] == 3 and m["hat_lower(10,24)"] == 3
          and m["old(K4xK4)"] == 13 and m["sgc_bound(K4xK4)"] == 7 and m["H(3,2,4) n"] == 32)
    return ok, m, ""


@claim("C-SPLIT", "generalized geodetic graphs", "g(G) = sg(G) = n", ["split(3,3)"],
       "g = sg = 3 and not geodetic", "fast", "stated construction")
def _split(limits, seed):
    G = F.split_graph(3, 3)
    gg = _need(is_generalized_geodetic(G, limits))
    return gg.value and gg.extra.get("g") == 3 == gg.extra.get("sg"), dict(gg.extra), ""


@claim("C-HIGHDIAM", "higher-diameter counterexample construction", "has diameter 2p",
       ["cexd(4,2,2)", "cexd(4,2,3)"], "diameter = 2p (construction only)", "fast",
       "stated construction")
def _highdiam(limits, seed):
    m = {p: DistanceOracle(F.counterexample_highdiam(4, 2, p)).diameter for p in (2, 3)}
    return all(m[p] == 2 * p for p in m), m, ""


# ---------------------------------------------------------------------------


def select(selector: list[str]) -> list[Claim]:
    """Resolve 'all', budget-class names and claim ids, in registry order."""
    if not selector:
        selector = ["fast"]
    wanted = set()
    for s in selector:
        if s == "all":
            wanted |= set(REGISTRY)
        elif s in BUDGET_CLASSES:
            wanted |= {c for c, v in REGISTRY.items() if v.budget_class == s}
        elif s in REGISTRY:
            wanted.add(s)
        else:
            raise KeyError(f"unknown claim or class {s!r}")
    return [c for cid, c in REGISTRY.items() if cid in wanted]


def run_claim(claim_id: str, limits: SearchLimits = DEFAULT_LIMITS, seed: int = 0) -> ClaimRecord:
    c = REGISTRY[claim_id]
    rec = c.record()
    t = time.perf_counter()
    try:
        ok, measured, detail = c.check(limits, seed)
        rec.result = PASS if ok else FAIL
        rec.measured = _jsonable(measured)
        rec.detail = detail
    except _Undecided as exc:
        rec.result = INCONCLUSIVE
        rec.detail = str(exc)
    rec.seconds = round(time.perf_counter() - t, 3)
    return rec


def _run(args):
    return run_claim(*args)


def run_claims(claims: list[Claim], limits: SearchLimits = DEFAULT_LIMITS, seed: int = 0,
               workers: int = 1) -> list[ClaimRecord]:
    jobs = [(c.claim_id, limits, seed) for c in claims]
    if workers <= 1 or len(jobs) <= 1:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, jobs))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return x


def format_table(records: list[ClaimRecord], timings: bool = False) -> str:
    rows = [("claim", "class", "result", "relation")]
    for r in records:
        rel = r.relation + (f"  [{r.seconds:.1f}s]" if timings and r.seconds is not None else "")
        rows.append((r.claim_id, r.budget_class, r.result or "-", rel))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = ["  ".join([row[0].ljust(widths[0]), row[1].ljust(widths[1]),
                        row[2].ljust(widths[2]), row[3]]) for row in rows]
    return "\n".join(lines) + "\n"


__all__ = [
    "REGISTRY", "ClaimRecord", "select", "run_claim", "run_claims", "format_table",
    "connected_graphs", "random_tree", "counterexample_witness",
]
