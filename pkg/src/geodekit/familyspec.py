"""Textual graph specifications.

Grammar (whitespace ignored)::

    spec   := "file:" PATH | "g6:" GRAPH6 | name [ "(" arg { "," arg } ")" ]
            | ("K" | "P" | "C") INT | "K" ["_"] "{" INT { "," INT } "}"
    arg    := INT "-" INT          (an edge, inside tree(...))
            | INT | spec

Family names::

    K(n) | K(a,b,...)   complete / complete multipartite     P(n), C(n)
    star(k)             K_{1,k}                              cocktail(n)
    split(m,n)          split graph                          tree(0-1,1-2,...)
    sub(G), hat(G)      subdivision / hat-subdivision        H(k,s,d)
    cex(k,n)            G_{k,n}                              cexd(k,n,p)
    cliquetree(T,n1,...,nl)                                  product(G,H)

Examples: ``hat(K4)``, ``H(3,2,4)``, ``cocktail(6)``, ``cex(4,2)``,
``product(P4,P3)``, ``K_{7,11}``, ``cliquetree(P3,2,2)``.
"""

from __future__ import annotations

import re
from pathlib import Path as FsPath

from . import families as F
from .codecs import ParseError, read_graph, read_graph6
from .graph import Graph


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(f"{msg} at position {self.pos} in {self.text!r}", self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def _comma_digit(self) -> bool:
        # "K7,11" continues a part list only when a digit follows the comma
        if self.peek() != ",":
            return False
        rest = self.text[self.pos + 1:].lstrip()
        return rest[:1].isdigit()

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def name(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z][A-Za-z]*").match(self.text, self.pos)
        if not m:
            self.error("expected family name")
        self.pos = m.end()
        return m.group()

    def arg(self):
        ch = self.peek()
        if ch.isdigit():
            a = self.integer()
            if self.peek() == "-":
                self.pos += 1
                return (a, self.integer())
            return a
        return self.spec()

    def args(self) -> list:
        out = []
        if self.peek() != "(":
            return out
        self.pos += 1
        if self.peek() == ")":
            self.pos += 1
            return out
        out.append(self.arg())
        while self.peek() == ",":
            self.pos += 1
            out.append(self.arg())
        self.expect(")")
        return out

    def spec(self) -> Graph:
        start = self.pos
        name = self.name()
        # compact atoms: K4, P3, C6 (letters then digits)
        if name in ("K", "P", "C") and self.peek().isdigit():
            n = self.integer()
            if name == "K" and self._comma_digit():
                parts = [n]
                while self._comma_digit():
                    self.pos += 1
                    parts.append(self.integer())
                return F.complete_multipartite(parts)
            return {"K": F.complete, "P": F.path, "C": F.cycle}[name](n)
        if name == "K" and self.peek() in ("_", "{"):
            if self.peek() == "_":
                self.pos += 1
            self.expect("{")
            parts = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.integer())
            self.expect("}")
            return F.complete(parts[0]) if len(parts) == 1 else F.complete_multipartite(parts)
        args = self.args()
        return self.build(name, args, start)

    def build(self, name: str, args: list, start: int) -> Graph:
        def ints(k=None):
            if not all(isinstance(a, int) for a in args) or (k is not None and len(args) != k):
                self.pos = start
                self.error(f"{name} expects {k if k is not None else 'integer'} integer argument(s)")
            return args

        def graphs(k):
            if len(args) != k or not all(isinstance(a, Graph) for a in args):
                self.pos = start
                self.error(f"{name} expects {k} graph argument(s)")
            return args

        key = name.lower()
        if name == "K":
            a = ints()
            return F.complete(a[0]) if len(a) == 1 else F.complete_multipartite(a)
        if name == "H":
            return F.h_graph(*ints(3))
        if key in ("p", "path"):
            return F.path(*ints(1))
        if key in ("c", "cycle"):
            return F.cycle(*ints(1))
        if key in ("kmp", "multipartite"):
            return F.complete_multipartite(ints())
        if key == "star":
            return F.star(*ints(1))
        if key == "cocktail":
            return F.cocktail_party(*ints(1))
        if key == "split":
            return F.split_graph(*ints(2))
        if key == "cex":
            return F.counterexample_graph(*ints(2))
        if key == "cexd":
            return F.counterexample_highdiam(*ints(3))
        if key == "sub":
            return F.subdivision(*graphs(1))
        if key == "hat":
            return F.hat_subdivision(*graphs(1))
        if key == "product":
            return F.cartesian_product(*graphs(2))[0]
        if key == "tree":
            if not args or not all(isinstance(a, tuple) for a in args):
                self.pos = start
                self.error("tree expects edges u-v")
            n = max(max(e) for e in args) + 1
            return F.tree_from_edges(n, args)
        if key == "cliquetree":
            if not args or not isinstance(args[0], Graph) or not all(isinstance(a, int) for a in args[1:]):
                self.pos = start
                self.error("cliquetree expects a tree followed by clique sizes")
            return F.clique_tree(args[0], args[1:])
        self.pos = start
        self.error(f"unknown family {name!r}")


def parse_spec(text: str) -> Graph:
    """Build the graph named by ``text`` (family spec, ``file:PATH`` or ``g6:STRING``)."""
    if text.startswith("file:"):
        return read_graph(FsPath(text[5:]).read_text())
    if text.startswith("g6:"):
        return read_graph6(text[3:])
    p = _Parser(text)
    G = p.spec()
    if p.peek():
        p.error("trailing input")
    return G


def parse_product(text: str):
    """Like :func:`parse_spec` but returns (G, H) for a top-level ``product(G,H)``."""
    p = _Parser(text)
    name = p.name()
    if name.lower() != "product":
        return None
    args = p.args()
    if len(args) != 2 or not all(isinstance(a, Graph) for a in args):
        p.error("product expects two graphs")
    return args[0], args[1]

