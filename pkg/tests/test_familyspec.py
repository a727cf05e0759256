import pytest

from geodekit import families as F
from geodekit.codecs import ParseError, write_graph6
from geodekit.familyspec import parse_product, parse_spec


@pytest.mark.parametrize("text,n,m", [
    ("hat(K4)", 10, 27),
    ("H(3,2,4)", 32, None),
    ("cocktail(6)", 6, 12),
    ("cex(4,2)", 17, None),
    ("product(P4,P3)", 12, 17),
    ("K_{7,11}", 18, 77),
    ("K7,11", 18, 77),
    ("K(2,2,2)", 6, 12),
    ("K{5}", 5, 10),
    ("cliquetree(P3,2,2)", 5, 6),
    ("tree(0-1, 1-2, 1-3)", 4, 3),
    ("split(3,3)", 6, 12),
    ("sub(K3)", 6, 6),
    ("star(4)", 5, 4),
    ("cexd(4,2,2)", 45, None),
    ("path(3)", 3, 2),
    ("cycle(5)", 5, 5),
    (" product( K3 , K3 ) ", 9, 18),
])
def test_specs(text, n, m):
    G = parse_spec(text)
    assert G.n == n
    if m is not None:
        assert G.m == m


def test_g6_and_file(tmp_path):
    assert parse_spec("g6:" + write_graph6(F.cycle(5))).edges == F.cycle(5).edges
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n")
    assert parse_spec(f"file:{f}").edges == F.path(3).edges


@pytest.mark.parametrize("text,pos", [
    ("hat(K4", 6),
    ("foo(3)", 0),
    ("P(3,4)", 0),
    ("K4 extra", 3),
    ("(", 0),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    assert exc.value.position == pos


def test_parse_product():
    G, H = parse_product("product(K4,K2)")
    assert (G.n, H.n) == (4, 2)
    assert parse_product("K4") is None
