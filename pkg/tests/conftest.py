import networkx as nx
from hypothesis import strategies as st

from geodekit.graph import build_graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=7, extra=0.35):
    """A random spanning tree plus random extra edges, so the result is connected."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and draw(st.floats(0, 1)) < extra:
                edges.add((u, v))
    perm = draw(st.permutations(range(n)))
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: _order(s)):
            terminalreporter.write_line(line)


def _order(line):
    head = line.split()[1]
    num = "".join(ch for ch in head if ch.isdigit())
    return int(num), head
