"""Command-line front end: ``geodekit construct|solve|bounds|product|verify-paper``.

Exit codes: 0 proved / all claims pass, 2 inconclusive, 1 usage or input error
or a failing claim.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import Optional, Sequence

from . import bounds as B
from . import claims as C
from .codecs import GRAPH6_MAX_N, write_dot, write_edge_list, write_graph6
from .families import cartesian_product
from .familyspec import parse_spec
from .graph import Graph, GraphError
from .limits import SearchLimits
from .schema import SCHEMAS
from .solvers import (
    enumerate_min_sg_sets,
    geodetic_number,
    sgc_of_set,
    strong_geodetic_core_number,
    strong_geodetic_number,
)

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _limits(args) -> SearchLimits:
    return SearchLimits(geodesic_cap=args.geodesic_cap, node_budget=args.node_budget,
                        time_budget=args.time_budget)


def _load(text: str) -> Graph:
    G = parse_spec(text)
    G.require_connected()
    return G


def parse_vertex_set(text: str, graph_text: str = "") -> list[int]:
    """Parse ``0,3,5..7`` (inclusive ranges); ``x1..x5,y1..y3`` label the two sides of ``K_{a,b}``."""
    sides = None
    m = re.fullmatch(r"\s*K_?\{?\s*(\d+)\s*,\s*(\d+)\s*\}?\s*", graph_text)
    if m:
        sides = (int(m.group(1)), int(m.group(2)))

    def vertex(tok: str) -> int:
        tok = tok.strip()
        if tok.isdigit():
            return int(tok)
        lm = re.fullmatch(r"([xy])(\d+)", tok)
        if not lm:
            raise UsageError(f"bad vertex {tok!r} in --set")
        if sides is None:
            raise UsageError(f"vertex label {tok!r} needs a complete bipartite graph K_{{a,b}}")
        i = int(lm.group(2))
        side = 0 if lm.group(1) == "x" else 1
        if not 1 <= i <= sides[side]:
            raise UsageError(f"label {tok!r} out of range 1..{sides[side]}")
        return i - 1 + (0 if side == 0 else sides[0])

    out = set()
    for part in text.split(","):
        if not part.strip():
            raise UsageError("empty entry in --set")
        if ".." in part:
            a, b = part.split("..", 1)
            lo, hi = vertex(a), vertex(b)
            if hi < lo:
                raise UsageError(f"empty range {part!r} in --set")
            out.update(range(lo, hi + 1))
        else:
            out.add(vertex(part))
    return sorted(out)


def _format_outcome(name: str, spec: str, out) -> str:
    d = out.to_dict()
    lines = []
    if out.proved:
        val = d["value"]
        if isinstance(val, list) and val and isinstance(val[0], list):
            lines.append(f"{name}({spec}): {len(val)} minimum set(s) of size {d.get('sg')}  [proved]")
            lines.extend("  " + " ".join(map(str, s)) for s in val)
        else:
            lines.append(f"{name}({spec}) = {_word(val)}  [proved]")
    else:
        lines.append(f"{name}({spec}) in [{_word(out.lower)}, {_word(out.upper)}]  "
                     f"[inconclusive: {out.limit_hit}]")
    for key in ("set", "core"):
        if key in d:
            lines.append(f"{key}: " + " ".join(map(str, d[key])))
    for k, v in d.items():
        if k not in ("set", "core", "paths", "value", "status", "lower", "upper", "limit_hit",
                     "certificates", "partial", "sg_sets"):
            lines.append(f"{k}: {_word(v)}")
    if "paths" in d:
        lines.append("geodesics:")
        lines.extend(f"  {p['pair'][0]}-{p['pair'][1]}: " + " ".join(map(str, p["path"]))
                     for p in d["paths"])
    return "\n".join(lines) + "\n"


def _word(v) -> str:
    if v is None:
        return "?"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


# ---------------------------------------------------------------------------


def _serialize(G: Graph, fmt: str) -> str:
    if fmt == "g6":
        return write_graph6(G) + "\n"
    return write_edge_list(G) if fmt == "edgelist" else write_dot(G)


def cmd_construct(args, out) -> int:
    G = parse_spec(args.graph)
    out.write(_serialize(G, args.format))
    return EXIT_OK


_SOLVERS = {
    "g": geodetic_number,
    "sg": strong_geodetic_number,
    "sgc": strong_geodetic_core_number,
    "enumerate-sg-sets": enumerate_min_sg_sets,
}


def cmd_solve(args, out) -> int:
    G = _load(args.graph)
    limits = _limits(args)
    t = time.perf_counter()
    if args.invariant == "sgc-of-set":
        if not args.set:
            raise UsageError("sgc-of-set needs --set")
        res = sgc_of_set(G, parse_vertex_set(args.set, args.graph), limits)
    else:
        if args.set:
            raise UsageError("--set only applies to sgc-of-set")
        res = _SOLVERS[args.invariant](G, limits)
    elapsed = time.perf_counter() - t
    if args.json:
        d = {"invariant": args.invariant, "graph": args.graph, **res.to_dict()}
        if args.timings:
            d["seconds"] = round(elapsed, 4)
        out.write(_dump(d))
    else:
        out.write(_format_outcome(args.invariant, args.graph, res))
        if args.timings:
            out.write(f"time: {elapsed:.3f}s\n")
    return EXIT_OK if res.proved else EXIT_INCONCLUSIVE


def cmd_bounds(args, out) -> int:
    G = _load(args.graph)
    rep = B.check_bounds(G, _limits(args), graph_id=args.graph)
    out.write(_dump(rep.to_dict()) if args.json else rep.to_table())
    if rep.violations:
        return EXIT_ERROR
    return EXIT_INCONCLUSIVE if rep.brackets else EXIT_OK


def _factor_summary(spec: str, G: Graph, limits) -> dict:
    core = strong_geodetic_core_number(G, limits)
    if core.proved:
        return {"graph": spec, "n": G.n, "sg": core.extra["sg"], "sgc": core.value}
    sg = strong_geodetic_number(G, limits)
    return {"graph": spec, "n": G.n, "sg": sg.value if sg.proved else None, "sgc": None}


def cmd_product(args, out) -> int:
    G, H = _load(args.a), _load(args.b)
    limits = _limits(args)
    P, _ = cartesian_product(G, H)
    fg, fh = _factor_summary(args.a, G, limits), _factor_summary(args.b, H, limits)
    old = core = None
    if fg["sg"] is not None and fh["sg"] is not None:
        old = B.product_upper_old(fg["sg"], G.n, fh["sg"], H.n)
        if fg["sgc"] is not None and fh["sgc"] is not None:
            core = B.product_upper_sgc(fg["sg"], fg["sgc"], G.n, fh["sg"], fh["sgc"], H.n)
    rep = {"graphs": [args.a, args.b], "n": P.n, "m": P.m, "graph6": write_graph6(P) if P.n <= GRAPH6_MAX_N else None,
           "factors": [fg, fh], "upper_old": old, "upper_core": core, "solve": None}
    code = EXIT_OK
    res = None
    if args.solve:
        res = strong_geodetic_number(P, limits)
        rep["solve"] = {"invariant": "sg", **res.to_dict()}
        if res.proved:
            rep["solve"]["tight_old"] = old == res.value if old is not None else None
            rep["solve"]["tight_core"] = core == res.value if core is not None else None
        else:
            code = EXIT_INCONCLUSIVE
    if args.json:
        out.write(_dump(rep))
        return code
    if not args.solve:
        out.write(_serialize(P, args.format))
        return code
    name = f"{args.a} x {args.b}"
    out.write(f"product {name}: n={P.n} m={P.m}\n")
    for f in (fg, fh):
        out.write(f"  factor {f['graph']}: n={f['n']} sg={_word(f['sg'])} sgc={_word(f['sgc'])}\n")
    out.write(f"upper bound min(sg(H)n(G)-sg(G)+1, ...) = {_word(old)}\n")
    out.write(f"upper bound min(sgc(H)(n(G)-1)+sg(H), ...) = {_word(core)}\n")
    out.write(_format_outcome("sg", name, res))
    if res.proved:
        out.write(f"tight: old={_word(old == res.value if old is not None else None)} "
                  f"core={_word(core == res.value if core is not None else None)}\n")
    return code


def cmd_verify_claims(args, out) -> int:
    selector = args.selector or os.environ.get("GEODEKIT_BUDGET_CLASS", "fast").split(",")
    try:
        chosen = C.select(selector)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    records = C.run_claims(chosen, _limits(args), seed=args.seed, workers=args.workers)
    summary = {k: sum(r.result == k for r in records) for k in (C.PASS, C.FAIL, C.INCONCLUSIVE)}
    if args.json:
        out.write(_dump({"claims": [r.to_dict(args.timings) for r in records], "summary": summary}))
    else:
        out.write(C.format_table(records, args.timings))
        for r in records:
            if r.result != C.PASS:
                out.write(f"{r.claim_id}: {r.result}: {json.dumps(r.measured)} {r.detail}".rstrip() + "\n")
        out.write(f"{summary['pass']} pass, {summary['fail']} fail, "
                  f"{summary['inconclusive']} inconclusive\n")
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(_dump({"claims": [r.to_dict(args.timings) for r in records], "summary": summary}))
    if summary[C.FAIL]:
        return EXIT_ERROR
    return EXIT_INCONCLUSIVE if summary[C.INCONCLUSIVE] else EXIT_OK


def cmd_schema(args, out) -> int:
    out.write(_dump(SCHEMAS[args.name]))
    return EXIT_OK


# ---------------------------------------------------------------------------

_GLOBAL_DEFAULTS = {"json": False, "workers": 1, "geodesic_cap": 10**5, "node_budget": 10**8,
                    "time_budget": None, "seed": 0, "timings": False}


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand without clobbering
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=S, help="machine-readable output")
    p.add_argument("--workers", type=int, default=S, metavar="N", help="parallel claim workers")
    p.add_argument("--geodesic-cap", type=int, default=S, metavar="N",
                   help="max geodesics enumerated per vertex pair")
    p.add_argument("--node-budget", type=int, default=S, metavar="N", help="search nodes per solve")
    p.add_argument("--time-budget", type=float, default=S, metavar="S", help="seconds per solve")
    p.add_argument("--seed", type=int, default=S, metavar="N", help="seed for random-tree claims")
    p.add_argument("--timings", action="store_true", default=S,
                   help="include wall-clock times (output is then not reproducible)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    p = _Parser(prog="geodekit", parents=[common],
                description="Strong geodetic numbers and cores: exact solvers with certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a graph from a family spec")
    c.add_argument("graph", help="family spec, g6:STRING or file:PATH")
    c.add_argument("--format", choices=("edgelist", "g6", "dot"), default="edgelist")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("solve", parents=[common], help="compute an invariant exactly")
    s.add_argument("invariant", choices=("g", "sg", "sgc", "sgc-of-set", "enumerate-sg-sets"))
    s.add_argument("graph")
    s.add_argument("--set", help="vertex set for sgc-of-set, e.g. 0..4,7 or x1..x5,y1..y3")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bounds", parents=[common], help="check the sgc and product bounds")
    b.add_argument("graph")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("product", parents=[common], help="Cartesian product, optionally solved")
    r.add_argument("a")
    r.add_argument("b")
    r.add_argument("--solve", choices=("sg",))
    r.add_argument("--format", choices=("edgelist", "g6", "dot"), default="edgelist")
    r.set_defaults(func=cmd_product)

    v = sub.add_parser("verify-paper", parents=[common], help="run the claim registry")
    v.add_argument("selector", nargs="*",
                   help="all, fast, standard, long or claim ids (default: $GEODEKIT_BUDGET_CLASS or fast)")
    v.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify_claims)

    sc = sub.add_parser("schema", parents=[common], help="print a JSON Schema for --json output")
    sc.add_argument("name", choices=sorted(SCHEMAS))
    sc.set_defaults(func=cmd_schema)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    for k, v in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        return args.func(args, out)
    except (GraphError, UsageError, ValueError, OSError) as exc:
        print(f"geodekit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
