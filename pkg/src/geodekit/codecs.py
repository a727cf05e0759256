"""Text formats: 0-based edge lists, graph6 (up to 62 vertices), DOT export.

Edge-list grammar::

    first non-blank line   : vertex count n
    each further line      : "u v" with 0 <= u, v < n
    blank lines and text after '#' are ignored
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class ParseError(GraphError):
    """Malformed text; ``position`` is a 1-based line (edge list) or 0-based byte (graph6)."""

    def __init__(self, message: str, position: int, kind: str = "parse"):
        super().__init__(message, kind=kind)
        self.position = position


def read_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}", lineno)
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}", lineno)
        edges.append((int(fields[0]), int(fields[1])))
        lines.append(lineno)
    if n is None:
        raise ParseError("empty input: missing vertex count", 1)
    # validate edge by edge so the error carries its line number
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}", lineno, kind="loop")
        if u >= n or v >= n:
            raise ParseError(f"line {lineno}: vertex out of range for n={n}", lineno, kind="range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}", lineno, kind="duplicate")
        seen.add(key)
    return build_graph(n, edges)


def write_edge_list(G: Graph) -> str:
    return "".join([f"{G.n}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def read_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(">>"):
        if not s.startswith(GRAPH6_HEADER):
            raise ParseError("graph6 header mismatch", 0, kind="header")
        offset = len(GRAPH6_HEADER)
    elif s.startswith(":") or s.startswith("&"):
        raise ParseError("graph6 header mismatch: sparse6/digraph6 input", 0, kind="header")
    data = s[offset:]
    if not data:
        raise ParseError("graph6: missing order byte", offset)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6: invalid byte {ch!r}", offset + i)
    if data[0] == "~":
        raise ParseError(f"graph6: orders above {GRAPH6_MAX_N} are not supported", offset)
    n, head = ord(data[0]) - 63, 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[head:]
    if len(body) != need:
        raise ParseError(
            f"graph6: expected {need} data bytes for n={n}, got {len(body)}",
            offset + head + min(len(body), need),
        )
    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def write_graph6(G: Graph, header: bool = False) -> str:
    if G.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 output limited to {GRAPH6_MAX_N} vertices", kind="range")
    bits = [
        1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return (GRAPH6_HEADER if header else "") + "".join(out)


def write_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{v}"];' for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    """Sniff the format: a lone token that is not an integer is graph6."""
    stripped = text.strip()
    if stripped and len(stripped.split()) == 1 and not stripped.isdigit():
        return read_graph6(stripped)
    return read_edge_list(text)
