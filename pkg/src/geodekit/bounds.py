"""Closed-form bounds on sg and sgc, evaluated in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Optional

from .graph import Graph
from .limits import DEFAULT_LIMITS, SearchLimits


def eq1_holds(k: int, s: int, d: int, n: int) -> bool:
    """(k(s-k) + C(k,2)) (d-1) >= n - s: paths meeting a k-core can host every vertex outside S."""
    if d < 2 or not 0 <= k <= s <= n:
        raise ValueError(f"need d >= 2 and 0 <= k <= s <= n, got k={k} s={s} d={d} n={n}")
    return (k * (s - k) + comb(k, 2)) * (d - 1) >= n - s


def sgc_lower_radical(n: int, s: int, d: int) -> float:
    """Floating evaluation of the ceiling-of-radical lower bound (advisory only)."""
    import math

    disc = (2 * s - 1) ** 2 - 8 * (n - s) / (d - 1)
    return math.ceil(s - (1 + math.sqrt(disc)) / 2)


def sgc_bounds(n: int, s: int, d: int) -> tuple[int, int]:
    """(lower, upper) for sgc of a graph of order n, strong geodetic number s, diameter d.

    The lower end is the least k >= 1 satisfying :func:`eq1_holds`.
    """
    if d < 2 or not 2 <= s < n:
        raise ValueError(f"need d >= 2 and 2 <= s < n, got n={n} s={s} d={d}")
    lower = next((k for k in range(1, s + 1) if eq1_holds(k, s, d, n)), None)
    if lower is None:
        raise ValueError(f"no graph has n={n}, sg={s}, diam={d}: capacity inequality unsatisfiable")
    return lower, min(s - 1, n - s)


def hat_lower(n: int, m: int) -> int:
    """min{k : sum_{i=1..k} (n-i) >= m}, the core lower bound for the hat-subdivision of G."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    if m > comb(n, 2):
        raise ValueError(f"m={m} exceeds C({n},2)")
    total = 0
    for k in range(1, n):
        total += n - k
        if total >= m:
            return k
    raise AssertionError("unreachable for m <= C(n,2)")


def product_upper_old(sgG: int, nG: int, sgH: int, nH: int) -> int:
    return min(sgH * nG - sgG + 1, sgG * nH - sgH + 1)


def product_upper_sgc(sgG: int, sgcG: int, nG: int, sgH: int, sgcH: int, nH: int) -> int:
    if not (1 <= sgcG <= sgG and 1 <= sgcH <= sgH):
        raise ValueError("need 1 <= sgc <= sg on both factors")
    return min(sgcH * (nG - 1) + sgH, sgcG * (nH - 1) + sgG)


def product_upper_corollary(sgG: int, nG: int, sgH: int, nH: int) -> int:
    return min(sgH * nG - nG + 1, sgG * nH - nH + 1)


def counterexample_closed_forms(k: int, n: int) -> tuple[int, int]:
    """(sg(G_{k,n}), upper bound on sg(G_{k,n} x K_n))."""
    if k < 4 or n < 2:
        raise ValueError("closed forms hold for k >= 4, n >= 2")
    return comb(k, 2) * (n - 1) + k, k * n + 1


def counterexample_gap(k: int, n: int) -> int:
    """Integer floor of the guaranteed gap (k(n-1)(k-3) - 2) / 2."""
    if k < 4 or n < 2:
        raise ValueError("gap formula holds for k >= 4, n >= 2")
    return (k * (n - 1) * (k - 3) - 2) // 2


@dataclass
class BoundCheck:
    name: str
    value: Optional[int]
    relation: str
    satisfied: Optional[bool]
    tight: Optional[bool] = None


@dataclass
class BoundsReport:
    graph_id: str
    n: int
    m: int
    diam: int
    g: Optional[int] = None
    sg: Optional[int] = None
    sgc: Optional[int] = None
    brackets: dict = field(default_factory=dict)
    exempt: bool = False
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.satisfied is False]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_table(self) -> str:
        head = [
            f"graph {self.graph_id}: n={self.n} m={self.m} diam={self.diam}",
            f"g={_fmt(self.g, self.brackets.get('g'))} sg={_fmt(self.sg, self.brackets.get('sg'))} "
            f"sgc={_fmt(self.sgc, self.brackets.get('sgc'))}",
        ]
        if self.exempt:
            head.append("bound-exempt (diameter 1)")
        rows = [("bound", "value", "relation", "satisfied", "tight")]
        for c in self.checks:
            rows.append((c.name, _s(c.value), c.relation, _s(c.satisfied), _s(c.tight)))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(head + lines) + "\n"


def _s(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _fmt(v, bracket) -> str:
    if v is not None:
        return str(v)
    if bracket:
        return f"[{bracket[0]},{bracket[1]}]"
    return "?"


def check_bounds(G: Graph, limits: SearchLimits = DEFAULT_LIMITS, graph_id: str = "G") -> BoundsReport:
    """Solve g, sg, sgc where budgets allow and test every applicable bound against them.

    Unsolved invariants stay bracketed; only proved values can produce a violation.
    """
    from .solvers import geodetic_number, oracle_for, strong_geodetic_core_number, strong_geodetic_number

    O = oracle_for(G)
    rep = BoundsReport(graph_id=graph_id, n=G.n, m=G.m, diam=O.diameter)
    g = geodetic_number(G, limits)
    sg = strong_geodetic_number(G, limits)
    sgc = strong_geodetic_core_number(G, limits)
    for name, out in (("g", g), ("sg", sg), ("sgc", sgc)):
        if out.proved:
            setattr(rep, name, out.value)
        else:
            rep.brackets[name] = (out.lower, out.upper)
    n, d = G.n, O.diameter
    if g.proved and sg.proved:
        rep.checks.append(BoundCheck("g <= sg", g.value, "<= sg", g.value <= sg.value, g.value == sg.value))
    if d < 2:
        rep.exempt = True
        return rep
    if sg.proved:
        s = sg.value
        rep.checks.append(BoundCheck("sg < n (non-complete)", s, f"< {n}", s < n))
        if sgc.proved and s < n:
            c = sgc.value
            lo, hi = sgc_bounds(n, s, d)
            rep.checks.append(BoundCheck("sgc lower (capacity)", lo, "<= sgc", lo <= c, lo == c))
            rep.checks.append(BoundCheck("sgc upper min(s-1, n-s)", hi, ">= sgc", c <= hi, c == hi))
            rep.checks.append(BoundCheck("sgc >= 1", 1, "<= sgc", c >= 1, c == 1))
            lhs = (c * (s - c) + comb(c, 2)) * (d - 1)
            rep.checks.append(BoundCheck("capacity inequality at (sgc, sg)", lhs, f">= n-s = {n - s}",
                                         lhs >= n - s, lhs == n - s))
    return rep
